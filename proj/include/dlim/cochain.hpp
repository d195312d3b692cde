#pragma once
#include <map>
#include <vector>

#include "dlim/fingroup.hpp"
#include "dlim/matrix.hpp"

namespace dlim {

// Bounded cochain complex of finite-rank free modules, cohomological grading:
//   ... -> C^n -> C^{n+1} -> ...   with d^{n+1} o d^n = 0 (checked at build).
// Degrees outside [lo, hi] are zero; empty complexes and zero-rank degrees
// are legal (Roos complexes of one-point posets degenerate this way).
class CochainComplex {
public:
    static CochainComplex build(int lo, std::vector<size_t> ranks,
                                std::vector<Matrix> differentials, Ring ring);

    int lo() const { return lo_; }
    int hi() const { return lo_ + int(ranks_.size()) - 1; }
    Ring ring() const { return ring_; }
    bool empty() const { return ranks_.empty(); }

    size_t rank_at(int n) const {
        if (n < lo_ || n > hi()) return 0;
        return ranks_[size_t(n - lo_)];
    }
    // d^n : C^n -> C^{n+1}; zero map outside the carried range
    Matrix differential_at(int n) const;

    FinAbGroup cohomology_at(int n) const;

    // Independent field-path dimension: plain Gaussian elimination ranks.
    size_t cohomology_dim_gauss(int n) const;
    // Smith-route dimension of H^n(C (x) F_p) for an integer complex (or the
    // integer lift of a mod-p one): ranks of the differentials mod p read off
    // the invariant factors.  Shares no elimination code with the field path.
    size_t cohomology_dim_fp_smith(int n, uint32_t p) const;

    long euler_characteristic_ranks() const;      // sum (-1)^n rank C^n
    long euler_characteristic_cohomology() const; // sum (-1)^n free rank H^n

    CochainComplex with_ring(Ring r) const;

private:
    int lo_ = 0;
    std::vector<size_t> ranks_;
    std::vector<Matrix> diffs_;  // diffs_[k] : C^{lo+k} -> C^{lo+k+1}
    Ring ring_ = Ring::Z();
};

}  // namespace dlim
