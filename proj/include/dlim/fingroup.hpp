#pragma once
#include <string>
#include <vector>

#include "dlim/matrix.hpp"

namespace dlim {

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/t_1 + ... + Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
// Unit factors are stripped and zero factors fold into the free rank, so
// isomorphism coincides with structural equality.  Field-coefficient results
// use free_rank as the vector-space dimension and carry no torsion.
struct FinAbGroup {
    size_t free_rank = 0;
    std::vector<Int> torsion;

    FinAbGroup() = default;
    FinAbGroup(size_t free, std::vector<Int> tors);

    static FinAbGroup trivial() { return FinAbGroup(); }
    static FinAbGroup free(size_t rank) { return FinAbGroup(rank, {}); }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FinAbGroup&) const = default;

    std::string str() const;            // "0", "Z^4", "Z/2 + Z/6", "Z + Z/3"
    std::string str(Ring ring) const;   // field dims print as "(Z/p)^r"
};

// Builds the normal form from an arbitrary list of cyclic orders (0 = Z).
FinAbGroup normalize_cyclic_factors(size_t free_rank, std::vector<Int> orders);

}  // namespace dlim
