#pragma once
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlim/errors.hpp"

namespace dlim {

// Ordinal below w^w in Cantor normal form: sum of w^e * c with exponents
// strictly descending and coefficients >= 1.  Comparison is lexicographic on
// the term list; addition absorbs on the left as ordinal addition must.
struct Ord {
    std::vector<std::pair<uint32_t, uint64_t>> terms;  // (exponent, coefficient)

    Ord() = default;

    static Ord zero() { return Ord(); }
    static Ord finite(uint64_t n) {
        Ord o;
        if (n) o.terms.push_back({0, n});
        return o;
    }
    static Ord omega_pow(uint32_t e, uint64_t c = 1) {
        Ord o;
        if (c) o.terms.push_back({e, c});
        return o;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_finite() const { return terms.empty() || terms.front().first == 0; }
    uint64_t finite_value() const {
        require(is_finite(), "ordinal is not finite");
        return terms.empty() ? 0 : terms.front().second;
    }
    bool is_limit() const { return !terms.empty() && terms.back().first > 0; }
    bool is_successor() const { return !terms.empty() && terms.back().first == 0; }

    friend std::strong_ordering operator<=>(const Ord& a, const Ord& b) {
        size_t n = std::min(a.terms.size(), b.terms.size());
        for (size_t i = 0; i < n; ++i) {
            if (a.terms[i].first != b.terms[i].first)
                return a.terms[i].first <=> b.terms[i].first;
            if (a.terms[i].second != b.terms[i].second)
                return a.terms[i].second <=> b.terms[i].second;
        }
        return a.terms.size() <=> b.terms.size();
    }
    friend bool operator==(const Ord& a, const Ord& b) { return a.terms == b.terms; }

    Ord plus(const Ord& b) const;
    Ord succ() const { return plus(finite(1)); }
    Ord pred() const;  // successors only

    // the unique x with prefix + x = *this, when prefix <= *this
    std::optional<Ord> minus_prefix(const Ord& prefix) const;

    // split a limit ordinal as rho + w^e (one copy of the last CNF term);
    // returns (rho, e)
    std::pair<Ord, uint32_t> limit_split() const;

    uint32_t degree() const { return terms.empty() ? 0 : terms.front().first; }

    std::string str() const;                 // "w^2*3+w+5", "0"
    static Ord parse(const std::string& s);  // inverse of str, also plain integers
};

}  // namespace dlim
