#include "dlim/ordinal.hpp"

#include <sstream>

namespace dlim {

Ord Ord::plus(const Ord& b) const {
    if (b.is_zero()) return *this;
    uint32_t lead = b.terms.front().first;
    Ord r;
    for (const auto& t : terms) {
        if (t.first < lead) break;  // absorbed by b's leading term
        r.terms.push_back(t);
    }
    size_t bi = 0;
    if (!r.terms.empty() && r.terms.back().first == lead) {
        r.terms.back().second += b.terms.front().second;
        bi = 1;
    }
    for (; bi < b.terms.size(); ++bi) r.terms.push_back(b.terms[bi]);
    return r;
}

Ord Ord::pred() const {
    require(is_successor(), "pred of a non-successor");
    Ord r = *this;
    if (r.terms.back().second > 1)
        r.terms.back().second -= 1;
    else
        r.terms.pop_back();
    return r;
}

std::optional<Ord> Ord::minus_prefix(const Ord& prefix) const {
    if (prefix > *this) return std::nullopt;
    size_t i = 0;
    while (i < prefix.terms.size() && i < terms.size() && prefix.terms[i] == terms[i]) ++i;
    if (i == prefix.terms.size()) {
        Ord r;
        r.terms.assign(terms.begin() + long(i), terms.end());
        return r;
    }
    // first differing term: either smaller exponent (prefix drops below) or
    // same exponent with smaller coefficient
    auto [pe, pc] = prefix.terms[i];
    verify(i < terms.size(), "minus_prefix: comparison invariant broken");
    auto [e, c] = terms[i];
    if (pe < e) {
        Ord r;
        r.terms.assign(terms.begin() + long(i), terms.end());
        return r;
    }
    verify(pe == e && pc < c, "minus_prefix: prefix is not below this ordinal");
    Ord r;
    r.terms.push_back({e, c - pc});
    for (size_t k = i + 1; k < terms.size(); ++k) r.terms.push_back(terms[k]);
    return r;
}

std::pair<Ord, uint32_t> Ord::limit_split() const {
    require(is_limit(), "limit_split of a non-limit ordinal");
    uint32_t e = terms.back().first;
    Ord rho = *this;
    if (rho.terms.back().second > 1)
        rho.terms.back().second -= 1;
    else
        rho.terms.pop_back();
    return {rho, e};
}

std::string Ord::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << "+";
        first = false;
        if (e == 0) {
            os << c;
        } else {
            os << "w";
            if (e > 1) os << "^" << e;
            if (c > 1) os << "*" << c;
        }
    }
    return os.str();
}

Ord Ord::parse(const std::string& s) {
    Ord r;
    size_t i = 0;
    auto fail = [&](const std::string& why) -> Ord {
        throw ValidationError("cannot parse ordinal '" + s + "': " + why);
    };
    auto read_num = [&]() -> uint64_t {
        size_t start = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected a number at position " + std::to_string(start));
        return std::stoull(s.substr(start, i - start));
    };
    if (s.empty()) fail("empty string");
    if (s == "0") return r;
    while (i < s.size()) {
        uint32_t e = 0;
        uint64_t c = 1;
        if (s[i] == 'w') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = uint32_t(read_num());
            }
            if (i < s.size() && s[i] == '*') {
                ++i;
                c = read_num();
            }
        } else {
            c = read_num();
        }
        if (c == 0) fail("zero coefficient");
        if (!r.terms.empty() && r.terms.back().first <= e) fail("exponents must descend");
        r.terms.push_back({e, c});
        if (i < s.size()) {
            if (s[i] != '+') fail("expected '+' at position " + std::to_string(i));
            ++i;
        }
    }
    return r;
}

}  // namespace dlim
