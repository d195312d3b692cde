#include "dlim/cochain.hpp"

#include "dlim/fpmat.hpp"
#include "dlim/smith.hpp"

namespace dlim {

CochainComplex CochainComplex::build(int lo, std::vector<size_t> ranks,
                                     std::vector<Matrix> differentials, Ring ring) {
    CochainComplex c;
    c.lo_ = lo;
    c.ring_ = ring;
    if (ranks.empty()) {
        require(differentials.empty(), "differentials given for an empty complex");
        return c;
    }
    require(differentials.size() + 1 == ranks.size(),
            "expected " + std::to_string(ranks.size() - 1) + " differentials, got " +
                std::to_string(differentials.size()));
    for (size_t k = 0; k + 1 < ranks.size(); ++k) {
        const Matrix& d = differentials[k];
        require(d.cols() == ranks[k] && d.rows() == ranks[k + 1],
                "differential at degree " + std::to_string(lo + int(k)) + " has shape " +
                    std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                    std::to_string(ranks[k + 1]) + "x" + std::to_string(ranks[k]));
    }
    c.ranks_ = std::move(ranks);
    c.diffs_ = std::move(differentials);
    for (auto& d : c.diffs_) {
        d = d.with_ring(ring);
    }
    for (size_t k = 0; k + 1 < c.diffs_.size(); ++k) {
        Matrix dd = c.diffs_[k + 1].mul(c.diffs_[k]);
        for (size_t i = 0; i < dd.rows(); ++i)
            for (size_t j = 0; j < dd.cols(); ++j)
                if (dd.at(i, j) != 0)
                    throw ValidationError(
                        "not a complex: d o d != 0 at degree " + std::to_string(lo + int(k)) +
                        ", witness entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + dd.at(i, j).str());
    }
    return c;
}

Matrix CochainComplex::differential_at(int n) const {
    if (n >= lo_ && n < hi()) return diffs_[size_t(n - lo_)];
    return Matrix::zero(rank_at(n + 1), rank_at(n), ring_);
}

FinAbGroup CochainComplex::cohomology_at(int n) const {
    size_t rn = rank_at(n);
    if (rn == 0) return FinAbGroup::trivial();
    if (ring_.is_field()) return FinAbGroup::free(cohomology_dim_gauss(n));

    Matrix dn = differential_at(n);
    Matrix dprev = differential_at(n - 1);
    // ker(d^n) as a free module, then im(d^{n-1}) expressed inside it by
    // exact integer solves; the quotient is a plain cokernel.
    Matrix k = kernel_basis(dn);
    if (k.cols() == 0) return FinAbGroup::trivial();
    Matrix rel(k.cols(), dprev.cols());
    for (size_t j = 0; j < dprev.cols(); ++j) {
        std::vector<Int> img(dprev.rows());
        for (size_t i = 0; i < dprev.rows(); ++i) img[i] = dprev.at(i, j);
        auto sol = solve_integer_system(k, img);
        verify(sol.has_value(), "image of previous differential escapes the kernel");
        for (size_t i = 0; i < k.cols(); ++i) rel.at(i, j) = (*sol)[i];
    }
    return cokernel(rel);
}

size_t CochainComplex::cohomology_dim_gauss(int n) const {
    size_t rn = rank_at(n);
    if (rn == 0) return 0;
    Ring f = ring_;
    require(f.is_field(), "gauss dimensions need field coefficients");
    size_t rk_n = fp::rank(differential_at(n));
    size_t rk_prev = fp::rank(differential_at(n - 1));
    return rn - rk_n - rk_prev;
}

size_t CochainComplex::cohomology_dim_fp_smith(int n, uint32_t p) const {
    size_t rn = rank_at(n);
    if (rn == 0) return 0;
    auto rank_mod_p = [&](const Matrix& m) -> size_t {
        if (m.rows() == 0 || m.cols() == 0) return 0;
        return smith_normal_form(m.with_ring(Ring::Z())).rank_mod(p);
    };
    return rn - rank_mod_p(differential_at(n)) - rank_mod_p(differential_at(n - 1));
}

long CochainComplex::euler_characteristic_ranks() const {
    long acc = 0;
    for (int n = lo_; n <= hi(); ++n)
        acc += (((n % 2) + 2) % 2 == 0 ? 1 : -1) * long(rank_at(n));
    return acc;
}

long CochainComplex::euler_characteristic_cohomology() const {
    long acc = 0;
    for (int n = lo_; n <= hi(); ++n)
        acc += (((n % 2) + 2) % 2 == 0 ? 1 : -1) * long(cohomology_at(n).free_rank);
    return acc;
}

CochainComplex CochainComplex::with_ring(Ring r) const {
    std::vector<Matrix> ds = diffs_;
    return build(lo_, ranks_, std::move(ds), r);
}

}  // namespace dlim
