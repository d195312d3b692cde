#pragma once
#include <map>

#include "dlim/ordinal.hpp"
#include "dlim/ring.hpp"

namespace dlim {

// The stage-by-stage construction of a coherent family
// < phi_alpha : rows x alpha -> K | alpha < bound > over a field K:
//   - phi_0 is empty; successor stages extend by zero;
//   - at a limit stage beta, a trivialization psi of the earlier stages with
//     supp(psi) inside beta is combined with the shifted ladder characteristic
//     function: phi_beta = psi + chi_beta^(beta), which places the indicator
//     of C_beta on row beta.
// The trivialization taken at a limit stage is the canonical ladder union:
//   psi(row, col) = phi_c(row, col) for the least ladder element c > col,
// which restricts exactly to phi_c on every rung (the later stages only touch
// columns above the rung) and keeps its rows below the stage.  Stages are
// materialized lazily, so transfinite families are probed pointwise.
class BaseFamilyRecursion {
public:
    BaseFamilyRecursion(Ord bound, Ring field);

    const Ord& bound() const { return bound_; }
    Ring field() const { return field_; }

    // phi_stage(row, col); requires col < stage <= bound
    uint32_t eval(const Ord& stage, const Ord& row, const Ord& col);

    struct StageInfo {
        Ord stage;
        Ord ladder_start;      // C_stage[0]
        uint32_t ladder_step;  // exponent e-1 of the step w^(e-1)
        std::string trivialization = "ladder-union";
    };
    // limit stages materialized so far, in stage order
    const std::map<Ord, StageInfo>& stages() const { return stages_; }

    // exact row support of phi_stage, available below w^2 where it is finite:
    // the limit ordinals w*1 .. w*k for stage = w*k + m
    std::vector<Ord> row_support(const Ord& stage) const;

    // support invariant supp(Phi | beta) <= beta, checked per materialized
    // stage: exact row sets below w^2, pointwise probes everywhere
    bool check_support_invariant(const Ord& stage, const std::vector<Ord>& probe_rows,
                                 const std::vector<Ord>& probe_cols);

    // chi insertion: phi_beta(beta, xi) = [xi in C_beta] at a limit stage
    bool check_chi_insertion(const Ord& stage, const std::vector<Ord>& probe_cols);

private:
    Ord bound_;
    Ring field_;
    std::map<std::tuple<Ord, Ord, Ord>, uint32_t> memo_;
    std::map<Ord, StageInfo> stages_;
};

}  // namespace dlim
