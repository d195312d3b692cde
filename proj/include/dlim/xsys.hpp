#pragma once
#include "dlim/family.hpp"
#include "dlim/ideal.hpp"
#include "dlim/ses.hpp"
#include "dlim/system.hpp"

namespace dlim {

// Inverse system with term at I the free module on (I n J_max) x H and
// restriction transition maps; the finite-scale reading of
// "functions I -> H with support in the ideal J".
InverseSystem build_x_system(const std::vector<std::string>& ground,
                             const std::vector<uint64_t>& index_sets, uint64_t jmax, Ring ring,
                             size_t h_rank, const Caps& caps = {});

// Companion full-function system (term H^I) and its quotient (term on
// coordinates outside J_max); together they present the X system as a short
// exact sequence with B flasque at finite scale.
InverseSystem build_b_system(const std::vector<std::string>& ground,
                             const std::vector<uint64_t>& index_sets, Ring ring, size_t h_rank,
                             const Caps& caps = {});
InverseSystem build_q_system(const std::vector<std::string>& ground,
                             const std::vector<uint64_t>& index_sets, uint64_t jmax, Ring ring,
                             size_t h_rank, const Caps& caps = {});

// Ground set kappa x lambda with canonical labels "i,j" and the list of all
// subsets in ascending bitmask order (so containment respects list order).
struct AklIndex {
    size_t kappa = 1, lambda = 1;
    std::vector<std::string> ground;  // "i,j"
    std::vector<uint64_t> index_sets; // all 2^(kappa*lambda) subsets
};
AklIndex akl_index(size_t kappa, size_t lambda, size_t poset_cap = 1u << 16);

struct AklSystems {
    AklIndex idx;
    SesOfSystems ses;  // A -> B -> B/A over the full function poset
};

// The A/B/(B/A) short exact sequence at finite parameters; the quotient is
// the zero system there (every X(f) is finite), which is asserted.
AklSystems build_akl_systems(size_t kappa, size_t lambda, Ring ring, size_t h_rank,
                             const Caps& caps = {}, size_t poset_cap = 1u << 16);

// System with terms (+)_kappa prod_I K over the generators of an ideal on X,
// ordered by containment; built directly, and cross-checkable against
// build_x_system on the product ground set.
InverseSystem build_y_system(size_t kappa, const std::vector<std::string>& ground_x,
                             const std::vector<uint64_t>& itilde_generators, Ring ring,
                             const Caps& caps = {});
// The same system routed through build_x_system (dual code path).
InverseSystem build_y_system_via_x(size_t kappa, const std::vector<std::string>& ground_x,
                                   const std::vector<uint64_t>& itilde_generators, Ring ring,
                                   const Caps& caps = {});

// Dictionary between Roos cochains of the quotient presentation and
// alternating families: a degree-(n-1) cocycle z of the Q system yields an
// n-dimensional family supported on containment chains (zero elsewhere),
// and conversely a family restricts to a cochain.
CoherentFamily cocycle_to_family(const std::vector<std::string>& ground,
                                 const std::vector<uint64_t>& index_sets, uint64_t jmax,
                                 Ring ring, size_t h_rank, size_t family_dim,
                                 const std::vector<Int>& cocycle, const Caps& caps = {});
std::vector<Int> family_to_cocycle(const CoherentFamily& fam, const Caps& caps = {});

// Extension operator: a family over the full function poset of (kappa,lambda)
// extends to (mu,nu) by phi-pullback along g(xi) = f(xi) n lambda, zero on
// the new coordinates.  Coherence and triviality status are preserved.
CoherentFamily extend_family(const CoherentFamily& fam, size_t kappa, size_t lambda, size_t mu,
                             size_t nu, size_t poset_cap = 1u << 16);

}  // namespace dlim
