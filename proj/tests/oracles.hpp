// Test-only oracles, independent of the library's computation paths.
#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <vector>

#include "dlim/family.hpp"
#include "dlim/matrix.hpp"

namespace oracles {

using dlim::Int;
using dlim::Matrix;
using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// gcd of all k x k minors, by direct enumeration (small matrices only).
// The product d_1 * ... * d_k of the Smith diagonal must equal this gcd.
inline Int minor_gcd(const Matrix& a, size_t k) {
    std::vector<size_t> rows(a.rows()), cols(a.cols());
    Int g = 0;
    std::vector<size_t> rsel, csel;
    auto det = [&](const std::vector<size_t>& r, const std::vector<size_t>& c) {
        // Laplace expansion; k <= 4 in tests
        auto rec = [&](auto&& self, std::vector<size_t> rr, std::vector<size_t> cc) -> Int {
            if (rr.empty()) return 1;
            Int acc = 0;
            for (size_t i = 0; i < rr.size(); ++i) {
                Int x = a.at(rr[i], cc[0]);
                if (x == 0) continue;
                std::vector<size_t> rr2;
                for (size_t t = 0; t < rr.size(); ++t)
                    if (t != i) rr2.push_back(rr[t]);
                std::vector<size_t> cc2(cc.begin() + 1, cc.end());
                Int sub = self(self, rr2, cc2);
                acc += (i % 2 == 0 ? x : -x) * sub;
            }
            return acc;
        };
        return rec(rec, r, c);
    };
    auto choose = [&](auto&& self, std::vector<size_t>& sel, size_t from, size_t total,
                      size_t want, bool is_rows) -> void {
        if (sel.size() == want) {
            if (is_rows) {
                rsel = sel;
                std::vector<size_t> c2;
                self(self, c2, 0, a.cols(), want, false);
            } else {
                g = gcd(g, det(rsel, sel));
            }
            return;
        }
        for (size_t i = from; i < total; ++i) {
            sel.push_back(i);
            self(self, sel, i + 1, total, want, is_rows);
            sel.pop_back();
        }
    };
    std::vector<size_t> sel;
    choose(choose, sel, 0, a.rows(), k, true);
    return abs(g);
}

// All families of a given dimension over F_2 with values on full tuple
// intersections, enumerated as bit patterns; used to decide the
// "every coherent family is trivial" side of the lemma suite by brute force.
struct F2FamilySpace {
    dlim::CoherentFamily base;  // shape carrier, no values
    std::vector<std::pair<std::vector<size_t>, size_t>> slots;  // tuple, bits per tuple
    size_t total_bits = 0;

    explicit F2FamilySpace(const dlim::CoherentFamily& shape) : base(shape) {
        for (const auto& t : shape.tuples(shape.n)) {
            size_t len = shape.value_len(t);
            if (len == 0) continue;
            slots.push_back({t, len});
            total_bits += len;
        }
    }

    dlim::CoherentFamily instance(uint64_t bits) const {
        dlim::CoherentFamily f = base;
        size_t used = 0;
        for (const auto& [tuple, len] : slots) {
            std::vector<Int> val(len);
            bool nonzero = false;
            for (size_t i = 0; i < len; ++i) {
                val[i] = (bits >> (used + i)) & 1;
                nonzero = nonzero || val[i] != 0;
            }
            used += len;
            if (nonzero) f.set_value(tuple, std::move(val));
        }
        return f;
    }
};

}  // namespace oracles
