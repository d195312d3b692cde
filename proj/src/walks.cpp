#include "dlim/walks.hpp"

#include <filesystem>
#include <fstream>

namespace dlim {

Ord Ladder::at(const Ord& g, uint64_t k) {
    if (g.is_successor()) {
        require(k == 0, "successor ladder has a single element");
        return g.pred();
    }
    require(g.is_limit(), "ladder of zero");
    auto [rho, e] = g.limit_split();
    return rho.plus(Ord::omega_pow(e - 1, k));  // k = 0 gives rho itself
}

uint64_t Ladder::count_below(const Ord& g, const Ord& xi) {
    if (g.is_successor()) return g.pred() < xi ? 1 : 0;
    require(g.is_limit(), "ladder of zero");
    require(xi < g, "count_below needs xi < g");
    auto [rho, e] = g.limit_split();
    if (xi <= rho) return 0;
    Ord delta = *xi.minus_prefix(rho);
    // least N with w^(e-1) * N >= delta
    auto [de, dc] = delta.terms.front();
    verify(de <= e - 1, "ladder arithmetic: step residue too large");
    if (de < e - 1) return 1;
    return dc + (delta.terms.size() > 1 ? 1 : 0);
}

Ord Ladder::next_from(const Ord& g, const Ord& xi) { return at(g, count_below(g, xi)); }

bool Ladder::contains(const Ord& g, const Ord& xi) {
    if (xi >= g || g.is_zero()) return false;
    if (g.is_successor()) return xi == g.pred();
    return at(g, count_below(g, xi)) == xi;
}

std::vector<Ord> Ladder::elements_in(const Ord& g, const Ord& lo, const Ord& hi) {
    std::vector<Ord> out;
    if (lo >= hi || lo >= g) return out;
    uint64_t k = count_below(g, lo);  // first index with C[k] >= lo
    for (;;) {
        if (g.is_successor() && k > 0) break;
        Ord c = at(g, k);
        if (c >= hi) break;
        out.push_back(c);
        ++k;
    }
    return out;
}

WalkContext::WalkContext(Ord bound, std::string cache_dir)
    : bound_(std::move(bound)), cache_dir_(std::move(cache_dir)) {
    if (cache_dir_.empty()) return;
    std::ifstream in(cache_dir_ + "/rho1.cache");
    std::string xi, beta;
    uint64_t v;
    while (in >> xi >> beta >> v) memo_[{Ord::parse(xi), Ord::parse(beta)}] = v;
}

WalkContext::~WalkContext() {
    if (cache_dir_.empty() || !cache_dirty_) return;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    if (ec) return;
    std::ofstream out(cache_dir_ + "/rho1.cache");
    for (const auto& [key, v] : memo_)
        out << key.first.str() << " " << key.second.str() << " " << v << "\n";
}

void WalkContext::check_bound(const Ord& x) const {
    if (x > bound_)
        throw CapExceeded("ordinal " + x.str() + " exceeds the configured bound " + bound_.str());
}

uint64_t WalkContext::rho1(const Ord& xi, const Ord& beta) {
    require(xi <= beta, "rho1 needs xi <= beta");
    check_bound(beta);
    if (xi == beta) return 0;
    auto key = std::make_pair(xi, beta);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    uint64_t weight = Ladder::count_below(beta, xi);
    Ord next = Ladder::next_from(beta, xi);
    uint64_t result = std::max(weight, rho1(xi, next));
    memo_.emplace(key, result);
    cache_dirty_ = true;
    return result;
}

// { xi in [lo,hi) : max(w1, e_g1(xi)) != max(w2, e_g2(xi)) }, exact.
//
// Invariant: every point of the interval is <= both walk roots.  The step
// peels the larger root g along its ladder: between consecutive ladder
// elements both the weight |C_g n xi| and the next walk step are constant,
// so on the piece [lo, c+1) with c the least ladder element >= lo,
//   e_g = max(count_below(g, lo), e_c).
// Each recursion replaces the larger root by ladder elements strictly below
// it, so the multiset of roots descends and the recursion terminates.  When
// the roots meet, a difference of floors reduces to a sublevel query.
void WalkContext::collect_diff(const Ord& g1, uint64_t w1, const Ord& g2, uint64_t w2, Iv iv,
                               std::set<Ord>& out) {
    if (iv.empty()) return;
    const Ord gmin = std::min(g1, g2);
    if (iv.hi > gmin) {
        // only the point gmin itself can sit at or above the smaller root
        if (iv.lo <= gmin && gmin < iv.hi) {
            uint64_t a = std::max(w1, rho1(gmin, g1));
            uint64_t b = std::max(w2, rho1(gmin, g2));
            if (a != b) out.insert(gmin);
        }
        iv.hi = gmin;
        if (iv.empty()) return;
    }
    if (g1 == g2) {
        if (w1 == w2) return;
        // max(w1,e) != max(w2,e) exactly when e < max(w1,w2)
        collect_sublevel(g1, std::min(w1, w2), std::max(w1, w2), iv, out);
        return;
    }
    const bool second_is_big = g2 > g1;
    const Ord& big = second_is_big ? g2 : g1;
    const Ord& small = second_is_big ? g1 : g2;
    const uint64_t wbig = second_is_big ? w2 : w1;
    const uint64_t wsmall = second_is_big ? w1 : w2;
    Ord lo = iv.lo;
    while (lo < iv.hi) {
        uint64_t cnt = Ladder::count_below(big, lo);
        Ord next = Ladder::at(big, cnt);
        Ord hi = std::min(iv.hi, next.succ());
        Iv piece{lo, hi};
        if (second_is_big)
            collect_diff(small, wsmall, next, std::max(wbig, cnt), piece, out);
        else
            collect_diff(next, std::max(wbig, cnt), small, wsmall, piece, out);
        lo = hi;
    }
}

// { xi in [lo,hi) : max(floor, e_g(xi)) < bound }, exact and finite: pieces
// whose accumulated weight reaches the bound stop contributing.
void WalkContext::collect_sublevel(const Ord& g, uint64_t floor, uint64_t bound, Iv iv,
                                   std::set<Ord>& out) {
    if (iv.empty() || floor >= bound) return;
    if (iv.hi > g) {
        if (iv.lo <= g) out.insert(g);  // e_g(g) = 0, and floor < bound already
        iv.hi = g;
        if (iv.empty()) return;
    }
    Ord lo = iv.lo;
    while (lo < iv.hi) {
        uint64_t cnt = Ladder::count_below(g, lo);
        Ord next = Ladder::at(g, cnt);
        Ord hi = std::min(iv.hi, next.succ());
        if (std::max(floor, cnt) < bound)
            collect_sublevel(next, std::max(floor, cnt), bound, Iv{lo, hi}, out);
        lo = hi;
    }
}

std::set<Ord> WalkContext::coherence_defect(const Ord& alpha, const Ord& beta) {
    require(alpha <= beta, "defect needs alpha <= beta");
    check_bound(beta);
    std::set<Ord> out;
    if (alpha == beta || alpha.is_zero()) return out;
    collect_diff(alpha, 0, beta, 0, Iv{Ord::zero(), alpha}, out);
    return out;
}

std::set<Ord> WalkContext::sublevel(const Ord& alpha, uint64_t bound) {
    check_bound(alpha);
    std::set<Ord> out;
    if (alpha.is_zero() || bound == 0) return out;
    collect_sublevel(alpha, 0, bound, Iv{Ord::zero(), alpha}, out);
    return out;
}

std::set<Ord> WalkContext::fiber(const Ord& alpha, uint64_t k) {
    std::set<Ord> lo = sublevel(alpha, k);
    std::set<Ord> hi = sublevel(alpha, k + 1);
    std::set<Ord> out;
    for (const Ord& x : hi)
        if (!lo.count(x)) out.insert(x);
    return out;
}

std::vector<std::pair<uint64_t, Ord>> IndexedOrdFunction::x_of() const {
    std::vector<std::pair<uint64_t, Ord>> out;
    for (const auto& [i, xs] : rows)
        for (const auto& x : xs) out.push_back({i, x});
    return out;
}

Ord IndexedOrdFunction::sp() const {
    Ord m = Ord::zero();
    for (const auto& [i, xs] : rows)
        for (const auto& x : xs) m = std::max(m, x);
    return m;
}

bool IndexedOrdFunction::leq(const IndexedOrdFunction& g) const {
    for (const auto& [i, xs] : rows)
        for (const auto& x : xs) {
            bool found = false;
            for (const auto& [j, ys] : g.rows) {
                if (j != i) continue;
                for (const auto& y : ys) found = found || y == x;
            }
            if (!found) return false;
        }
    return true;
}

int tau(WalkContext& ctx, const Ord& gamma, uint64_t i, const Ord& xi) {
    require(xi <= gamma, "tau needs xi <= gamma");
    return ctx.rho1(xi, gamma) == i ? 1 : 0;
}

TauPhi build_tau_phi(WalkContext& ctx, const IndexedOrdFunction& f) {
    TauPhi r;
    r.sp = f.sp();
    for (const auto& [i, xi] : f.x_of()) r.phi.push_back({{i, xi}, tau(ctx, r.sp, i, xi)});
    // phi_f = tau_sp(f) restricted to X(f), by construction; re-checked here
    for (const auto& [pair, v] : r.phi)
        verify(v == tau(ctx, r.sp, pair.first, pair.second), "phi_f differs from tau_sp(f) on X(f)");
    return r;
}

}  // namespace dlim
