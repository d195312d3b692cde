#include "dlim/poset.hpp"

#include <algorithm>

namespace dlim {

Poset Poset::build(std::vector<std::string> labels,
                   const std::vector<std::pair<size_t, size_t>>& le_pairs) {
    Poset p;
    const size_t n = labels.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            require(labels[i] != labels[j], "duplicate poset element '" + labels[i] + "'");
    p.labels_ = std::move(labels);
    p.le_.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i) p.le_[i * n + i] = 1;
    for (auto [a, b] : le_pairs) {
        require(a < n && b < n, "relation pair index out of range");
        p.le_[a * n + b] = 1;
    }
    // Warshall closure
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i) {
            if (!p.le_[i * n + k]) continue;
            for (size_t j = 0; j < n; ++j)
                if (p.le_[k * n + j]) p.le_[i * n + j] = 1;
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            require(!(p.le_[i * n + j] && p.le_[j * n + i]),
                    "antisymmetry violated: " + p.labels_[i] + " <= " + p.labels_[j] +
                        " and conversely");
    return p;
}

std::optional<size_t> Poset::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool Poset::is_directed() const {
    const size_t n = size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            bool bounded = false;
            for (size_t c = 0; c < n && !bounded; ++c) bounded = leq(a, c) && leq(b, c);
            if (!bounded) return false;
        }
    return true;
}

std::optional<size_t> Poset::maximum() const {
    for (size_t m = 0; m < size(); ++m) {
        bool top = true;
        for (size_t a = 0; a < size() && top; ++a) top = leq(a, m);
        if (top) return m;
    }
    return std::nullopt;
}

bool Poset::is_cofinal(const std::vector<size_t>& subset) const {
    for (size_t a = 0; a < size(); ++a) {
        bool dominated = false;
        for (size_t s : subset)
            if (leq(a, s)) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

bool Poset::is_down_closed(const std::vector<size_t>& subset) const {
    std::vector<char> in(size(), 0);
    for (size_t s : subset) in[s] = 1;
    for (size_t s : subset)
        for (size_t a = 0; a < size(); ++a)
            if (leq(a, s) && !in[a]) return false;
    return true;
}

std::vector<std::vector<size_t>> Poset::down_sets(size_t cap) const {
    const size_t n = size();
    if (n >= 63 || (uint64_t(1) << n) > cap)
        throw CapExceeded("down-set enumeration needs 2^" + std::to_string(n) +
                          " subsets, cap is " + std::to_string(cap) +
                          " (supply a sampled family instead)");
    std::vector<std::vector<size_t>> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        bool ok = true;
        for (size_t b = 0; b < n && ok; ++b) {
            if (!(mask >> b & 1)) continue;
            for (size_t a = 0; a < n && ok; ++a)
                if (leq(a, b) && !(mask >> a & 1)) ok = false;
        }
        if (!ok) continue;
        std::vector<size_t> s;
        for (size_t b = 0; b < n; ++b)
            if (mask >> b & 1) s.push_back(b);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<size_t>> Poset::chains(size_t len, size_t cap) const {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur;
    auto extend = [&](auto&& self, size_t last) -> void {
        if (cur.size() == len + 1) {
            if (out.size() >= cap)
                throw CapExceeded("chain enumeration exceeded cap " + std::to_string(cap));
            out.push_back(cur);
            return;
        }
        for (size_t nxt = 0; nxt < size(); ++nxt)
            if (lt(last, nxt)) {
                cur.push_back(nxt);
                self(self, nxt);
                cur.pop_back();
            }
    };
    for (size_t first = 0; first < size(); ++first) {
        cur = {first};
        extend(extend, first);
    }
    return out;
}

Poset Poset::restrict(const std::vector<size_t>& subset) const {
    std::vector<std::string> labels;
    labels.reserve(subset.size());
    for (size_t s : subset) {
        require(s < size(), "restriction index out of range");
        labels.push_back(labels_[s]);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = 0; j < subset.size(); ++j)
            if (leq(subset[i], subset[j])) pairs.emplace_back(i, j);
    return build(std::move(labels), pairs);
}

}  // namespace dlim
