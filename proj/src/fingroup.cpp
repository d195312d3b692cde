#include "dlim/fingroup.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace dlim {

using boost::multiprecision::gcd;

FinAbGroup::FinAbGroup(size_t free, std::vector<Int> tors) {
    *this = normalize_cyclic_factors(free, std::move(tors));
}

// Invariant factors from an arbitrary multiset of cyclic orders.  Uses the
// identity Z/a + Z/b = Z/gcd(a,b) + Z/lcm(a,b) repeatedly; no factoring, so
// large orders coming out of a Smith form are handled exactly.
FinAbGroup normalize_cyclic_factors(size_t free_rank, std::vector<Int> orders) {
    FinAbGroup g;
    g.free_rank = free_rank;
    std::vector<Int> t;
    for (Int d : orders) {
        if (d < 0) d = -d;
        if (d == 0)
            g.free_rank++;
        else if (d != 1)
            t.push_back(d);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j) {
                if (t[j] % t[i] == 0) continue;
                Int a = t[i], b = t[j];
                Int gg = gcd(a, b);
                t[i] = gg;
                t[j] = a / gg * b;
                changed = true;
            }
    }
    std::sort(t.begin(), t.end());
    std::erase(t, Int(1));
    for (size_t i = 0; i + 1 < t.size(); ++i)
        verify(t[i + 1] % t[i] == 0, "invariant factor chain broken");
    g.torsion = std::move(t);
    return g;
}

std::string FinAbGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

std::string FinAbGroup::str(Ring ring) const {
    if (!ring.is_field()) return str();
    if (free_rank == 0) return "0";
    std::ostringstream os;
    os << "(Z/" << ring.p << ")";
    if (free_rank > 1) os << "^" << free_rank;
    return os.str();
}

}  // namespace dlim
