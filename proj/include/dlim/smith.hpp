#pragma once
#include <optional>
#include <vector>

#include "dlim/fingroup.hpp"
#include "dlim/matrix.hpp"

namespace dlim {

// u * a * v = diag(d), with u, v unimodular (built from elementary row/column
// operations only).  The reconstruction identity is re-checked at
// construction; a failure there is an internal bug, never bad input.
struct SmithForm {
    std::vector<Int> d;  // diagonal, d[i] >= 0, d[i] | d[i+1] among nonzeros
    Matrix u, v;
    size_t rows = 0, cols = 0;

    size_t rank() const {
        size_t r = 0;
        while (r < d.size() && d[r] != 0) ++r;
        return r;
    }
    // rank of the matrix over Z/p: nonzero diagonal entries not killed by p
    size_t rank_mod(uint32_t p) const {
        size_t r = 0;
        for (const auto& x : d)
            if (x != 0 && x % p != 0) ++r;
        return r;
    }
};

SmithForm smith_normal_form(const Matrix& a);

// Some x with a*x = b exactly over Z, or nullopt when no integer solution
// exists.  Deterministic: free coordinates are set to zero in Smith basis.
std::optional<std::vector<Int>> solve_integer_system(const Matrix& a, const std::vector<Int>& b);

// Columns form a Z-basis of ker(a) (over Z/p: a spanning set of the kernel).
Matrix kernel_basis(const Matrix& a);

// coker(a) = Z^rows / column span, in invariant-factor normal form.
FinAbGroup cokernel(const Matrix& a);

struct MapGroups {
    Matrix kernel;       // columns span ker(a) over the coefficient ring
    FinAbGroup coker;    // target / image in normal form
};
MapGroups group_from_map(const Matrix& a);

// Fraction-free (Bareiss) rank over Q; shares no code with the Smith-form
// elimination, so it can serve as an independent cross-check.
size_t rank_rational(const Matrix& a);

// Exact determinant by fraction-free elimination (square matrices).
Int determinant(const Matrix& a);

// Solve a*x = b over Z/p (a.ring() must be the field), deterministic.
std::optional<std::vector<Int>> solve_mod_p(const Matrix& a, const std::vector<Int>& b);

}  // namespace dlim
