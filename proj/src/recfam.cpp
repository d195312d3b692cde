#include "dlim/recfam.hpp"

#include "dlim/walks.hpp"

namespace dlim {

BaseFamilyRecursion::BaseFamilyRecursion(Ord bound, Ring field)
    : bound_(std::move(bound)), field_(field) {
    require(field_.is_field(), "the base family construction needs a field");
}

uint32_t BaseFamilyRecursion::eval(const Ord& stage, const Ord& row, const Ord& col) {
    require(col < stage, "column must lie below the stage");
    if (stage > bound_)
        throw CapExceeded("stage " + stage.str() + " exceeds the bound " + bound_.str());
    auto key = std::make_tuple(stage, row, col);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    uint32_t result;
    if (stage.is_successor()) {
        Ord prev = stage.pred();
        result = col < prev ? eval(prev, row, col) : 0;
    } else {
        if (!stages_.count(stage)) {
            auto [rho, e] = stage.limit_split();
            stages_.emplace(stage, StageInfo{stage, rho, e - 1, "ladder-union"});
        }
        // psi: the ladder-union trivialization of the earlier stages
        Ord rung = Ladder::next_from(stage, col.succ());  // least ladder element > col
        uint32_t psi = eval(rung, row, col);
        // chi insertion: indicator of C_stage shifted onto row = stage
        uint32_t chi = (row == stage && Ladder::contains(stage, col)) ? 1 : 0;
        result = (psi + chi) % field_.p;
    }
    memo_.emplace(key, result);
    return result;
}

std::vector<Ord> BaseFamilyRecursion::row_support(const Ord& stage) const {
    // below w^2 the support is exactly { w*j : 1 <= j <= k } for
    // stage = w*k + m; higher stages have no finite row set to report
    if (!(stage < Ord::omega_pow(2)))
        throw CapExceeded("exact row support is only materialized below w^2");
    std::vector<Ord> rows;
    if (stage.is_finite()) return rows;
    uint64_t k = stage.terms.front().second;  // leading term is w*k
    for (uint64_t j = 1; j <= k; ++j) rows.push_back(Ord::omega_pow(1, j));
    return rows;
}

bool BaseFamilyRecursion::check_support_invariant(const Ord& stage,
                                                  const std::vector<Ord>& probe_rows,
                                                  const std::vector<Ord>& probe_cols) {
    // rows(phi_stage) <= stage gives supp(Phi | beta) <= beta for every later
    // stage beta.  Exact row sets are available below w^2; everywhere the
    // rows strictly above the stage are probed pointwise and must be silent.
    if (stage < Ord::omega_pow(2)) {
        for (const Ord& r : row_support(stage))
            if (!(r <= stage)) return false;
    }
    for (const Ord& r : probe_rows) {
        if (!(r > stage)) continue;
        for (const Ord& c : probe_cols)
            if (c < stage && eval(stage, r, c) != 0) return false;
    }
    for (const Ord& c : probe_cols)
        if (c < stage && eval(stage, stage.succ(), c) != 0) return false;
    return true;
}

bool BaseFamilyRecursion::check_chi_insertion(const Ord& stage, const std::vector<Ord>& probe_cols) {
    require(stage.is_limit(), "chi insertion happens at limit stages");
    for (const Ord& c : probe_cols) {
        if (!(c < stage)) continue;
        uint32_t want = Ladder::contains(stage, c) ? 1 : 0;
        if (eval(stage, stage, c) != want) return false;
    }
    return true;
}

}  // namespace dlim
