#pragma once
#include <map>
#include <set>
#include <vector>

#include "dlim/ordinal.hpp"

namespace dlim {

// Canonical fundamental sequences below w^w.  For a limit g = rho + w^e the
// ladder is C_g = < rho + w^(e-1) * k : k < w > (so C_w = <0,1,2,...>), and
// C_(a+1) = <a> for successors.  Strictly increasing with supremum g.
struct Ladder {
    static Ord at(const Ord& g, uint64_t k);
    // number of ladder elements strictly below xi (xi < g for limits)
    static uint64_t count_below(const Ord& g, const Ord& xi);
    // least ladder element >= xi; requires xi < g (successors: xi <= pred)
    static Ord next_from(const Ord& g, const Ord& xi);
    static bool contains(const Ord& g, const Ord& xi);
    // ladder elements in the half-open interval [lo, hi)
    static std::vector<Ord> elements_in(const Ord& g, const Ord& lo, const Ord& hi);
};

// Walks context: owns the rho1 memo table (a pure fill-once cache; results
// equal uncached recomputation).  An optional cache directory persists the
// table across runs.
class WalkContext {
public:
    WalkContext() = default;
    explicit WalkContext(Ord bound) : bound_(std::move(bound)) {}
    WalkContext(Ord bound, std::string cache_dir);
    ~WalkContext();

    const Ord& bound() const { return bound_; }

    // maximal weight along the walk from beta down to xi; xi <= beta
    uint64_t rho1(const Ord& xi, const Ord& beta);
    uint64_t e(const Ord& xi, const Ord& alpha) { return rho1(xi, alpha); }

    // exact defect set D(alpha, beta) = { xi < alpha : e_alpha(xi) != e_beta(xi) },
    // computed symbolically by interval decomposition along the ladders.
    std::set<Ord> coherence_defect(const Ord& alpha, const Ord& beta);

    // exact sublevel set { xi < alpha : e_alpha(xi) < bound }
    std::set<Ord> sublevel(const Ord& alpha, uint64_t bound);

    // fiber e_alpha^{-1}(k) below alpha
    std::set<Ord> fiber(const Ord& alpha, uint64_t k);

    size_t memo_size() const { return memo_.size(); }

private:
    void check_bound(const Ord& x) const;

    struct Iv {
        Ord lo, hi;  // [lo, hi)
        bool empty() const { return lo >= hi; }
    };
    void collect_diff(const Ord& g1, uint64_t w1, const Ord& g2, uint64_t w2, Iv iv,
                      std::set<Ord>& out);
    void collect_sublevel(const Ord& g, uint64_t floor, uint64_t bound, Iv iv,
                          std::set<Ord>& out);

    Ord bound_ = Ord::omega_pow(6);
    std::map<std::pair<Ord, Ord>, uint64_t> memo_;
    std::string cache_dir_;
    bool cache_dirty_ = false;
};

// Finitely supported f: first coordinates are naturals, each mapped to a
// finite set of ordinals.  X(f) is the finite set of pairs (i, xi).
struct IndexedOrdFunction {
    std::vector<std::pair<uint64_t, std::vector<Ord>>> rows;  // sorted by row

    std::vector<std::pair<uint64_t, Ord>> x_of() const;
    Ord sp() const;  // max of the union (0 when empty)
    bool leq(const IndexedOrdFunction& g) const;  // X(f) subset of X(g)
};

struct TauPhi {
    Ord sp;
    // phi_f on X(f): 1 where e_sp(xi) == i, else 0
    std::vector<std::pair<std::pair<uint64_t, Ord>, int>> phi;
};

// tau_gamma(i, xi) = 1 iff e_gamma(xi) = i (the reflected graph of e_gamma);
// phi_f is tau_sp(f) restricted to X(f), which holds by construction and is
// re-checked.
int tau(WalkContext& ctx, const Ord& gamma, uint64_t i, const Ord& xi);
TauPhi build_tau_phi(WalkContext& ctx, const IndexedOrdFunction& f);

}  // namespace dlim
