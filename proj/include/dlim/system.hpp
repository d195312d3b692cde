#pragma once
#include <map>
#include <optional>

#include "dlim/cochain.hpp"
#include "dlim/poset.hpp"

namespace dlim {

struct Caps {
    size_t max_chains = 1'000'000;
    size_t max_subsets = 1'000'000;
};

// Inverse system of finite-rank free modules over a finite poset: a term at
// each element and a transition map term(y) -> term(x) for every x <= y,
// functorial (p_xz = p_xy o p_yz, checked exactly at construction).
class InverseSystem {
public:
    // maps: one matrix per strict pair; pairs not supplied are filled in by
    // composition along any path (and must agree on all of them).
    static InverseSystem build(Poset poset, std::vector<size_t> term_ranks,
                               const std::map<std::pair<size_t, size_t>, Matrix>& maps,
                               Ring ring);

    const Poset& poset() const { return poset_; }
    Ring ring() const { return ring_; }
    size_t term_rank(size_t x) const { return ranks_[x]; }
    const std::vector<size_t>& term_ranks() const { return ranks_; }
    // x <= y; identity when x == y
    Matrix map_for(size_t x, size_t y) const;

    size_t total_rank() const;

    InverseSystem restrict(const std::vector<size_t>& subset) const;

private:
    Poset poset_;
    std::vector<size_t> ranks_;
    std::map<std::pair<size_t, size_t>, Matrix> maps_;  // strict pairs only
    Ring ring_ = Ring::Z();
};

// Layout of the degree-n Roos term: one block of rank term(x0) per strict
// chain x0 < ... < xn, chains in the stable enumeration order of
// Poset::chains.
struct RoosLayout {
    std::vector<std::vector<std::vector<size_t>>> chains;  // per degree
    std::vector<std::vector<size_t>> offsets;              // block offsets per degree
    std::vector<size_t> ranks;                             // total rank per degree
};

RoosLayout roos_layout(const InverseSystem& s, const Caps& caps = {});

// Normalized Roos complex (strictly increasing chains); degree 0 is the
// product of all terms and the differential follows
//   (d s)_{x0<...<x_{n+1}} = p_{x0 x1}(s_{chain minus x0})
//                            + sum_{i=1..n+1} (-1)^i s_{chain minus xi}.
CochainComplex roos_complex(const InverseSystem& s, const Caps& caps = {});

// lim^n as H^n of the Roos complex.  lim^0 is cross-checked against the
// compatible-families kernel computed by an independent elimination.
FinAbGroup derived_limit(const InverseSystem& s, int n, const Caps& caps = {});

// All derived limits 0..nmax in one Roos pass.
std::vector<FinAbGroup> derived_limits(const InverseSystem& s, int nmax, const Caps& caps = {});

// Columns span lim^0 inside the degree-0 Roos term.
Matrix limit_kernel(const InverseSystem& s, const Caps& caps = {});

struct FlasqueReport {
    bool flasque = true;
    std::optional<std::vector<size_t>> witness;  // failing down-closed subset
};

// Flasque: lim s -> lim (s restricted to L) is onto for every down-closed L.
// A supplied family of subsets replaces full enumeration (used above the cap).
FlasqueReport is_flasque(const InverseSystem& s, const Caps& caps = {},
                         const std::vector<std::vector<size_t>>* sampled = nullptr);

InverseSystem restrict_cofinal(const InverseSystem& s, const std::vector<size_t>& subset);

}  // namespace dlim
