#include "dlim/system.hpp"

#include <algorithm>

#include "dlim/fpmat.hpp"
#include "dlim/smith.hpp"

namespace dlim {

InverseSystem InverseSystem::build(Poset poset, std::vector<size_t> term_ranks,
                                   const std::map<std::pair<size_t, size_t>, Matrix>& maps,
                                   Ring ring) {
    const size_t n = poset.size();
    require(term_ranks.size() == n, "term rank list does not match poset size");
    InverseSystem s;
    s.ring_ = ring;

    for (const auto& [key, m] : maps) {
        auto [x, y] = key;
        require(x < n && y < n, "transition map indices out of range");
        require(poset.lt(x, y), "transition map given for a non-related pair " +
                                    poset.label(x) + ", " + poset.label(y));
        require(m.rows() == term_ranks[x] && m.cols() == term_ranks[y],
                "transition map " + poset.label(x) + " <= " + poset.label(y) + " has shape " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                    std::to_string(term_ranks[x]) + "x" + std::to_string(term_ranks[y]));
    }

    // Fill every strict pair by composing along covers; supplied maps win but
    // must then agree with every composition through every midpoint.
    std::map<std::pair<size_t, size_t>, Matrix> full;
    for (const auto& [key, m] : maps) full.emplace(key, m.with_ring(ring));

    // order pairs by interval size so compositions are available when needed
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (poset.lt(x, y)) pairs.emplace_back(x, y);
    auto interval_size = [&](const std::pair<size_t, size_t>& pr) {
        size_t c = 0;
        for (size_t z = 0; z < n; ++z)
            if (poset.leq(pr.first, z) && poset.leq(z, pr.second)) ++c;
        return c;
    };
    std::stable_sort(pairs.begin(), pairs.end(),
                     [&](const auto& a, const auto& b) { return interval_size(a) < interval_size(b); });

    for (const auto& pr : pairs) {
        auto [x, y] = pr;
        if (full.count(pr)) continue;
        bool made = false;
        for (size_t z = 0; z < n && !made; ++z) {
            if (!(poset.lt(x, z) && poset.lt(z, y))) continue;
            auto xz = full.find({x, z});
            auto zy = full.find({z, y});
            if (xz == full.end() || zy == full.end()) continue;
            full.emplace(pr, xz->second.mul(zy->second));
            made = true;
        }
        require(made, "no transition map given or derivable for " + poset.label(x) + " <= " +
                          poset.label(y));
    }

    // exact functoriality on every triple
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (!poset.lt(x, y)) continue;
            for (size_t z = 0; z < n; ++z) {
                if (!poset.lt(y, z)) continue;
                const Matrix& xz = full.at({x, z});
                Matrix composed = full.at({x, y}).mul(full.at({y, z}));
                if (!(xz == composed))
                    throw ValidationError("not functorial at (" + poset.label(x) + ", " +
                                          poset.label(y) + ", " + poset.label(z) +
                                          "): p_xz != p_xy o p_yz");
            }
        }

    s.poset_ = std::move(poset);
    s.ranks_ = std::move(term_ranks);
    s.maps_ = std::move(full);
    return s;
}

Matrix InverseSystem::map_for(size_t x, size_t y) const {
    require(poset_.leq(x, y), "map_for needs x <= y");
    if (x == y) return Matrix::identity(ranks_[x], ring_);
    return maps_.at({x, y});
}

size_t InverseSystem::total_rank() const {
    size_t t = 0;
    for (size_t r : ranks_) t += r;
    return t;
}

InverseSystem InverseSystem::restrict(const std::vector<size_t>& subset) const {
    Poset sub = poset_.restrict(subset);
    std::vector<size_t> ranks;
    for (size_t s : subset) ranks.push_back(ranks_[s]);
    std::map<std::pair<size_t, size_t>, Matrix> maps;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = 0; j < subset.size(); ++j)
            if (sub.lt(i, j)) maps.emplace(std::make_pair(i, j), map_for(subset[i], subset[j]));
    return build(std::move(sub), std::move(ranks), maps, ring_);
}

RoosLayout roos_layout(const InverseSystem& s, const Caps& caps) {
    RoosLayout lay;
    size_t budget = caps.max_chains;
    for (size_t len = 0;; ++len) {
        auto ch = s.poset().chains(len, budget);
        if (ch.empty()) break;
        budget -= std::min(budget, ch.size());
        std::vector<size_t> off;
        size_t total = 0;
        for (const auto& c : ch) {
            off.push_back(total);
            total += s.term_rank(c.front());
        }
        lay.chains.push_back(std::move(ch));
        lay.offsets.push_back(std::move(off));
        lay.ranks.push_back(total);
    }
    return lay;
}

CochainComplex roos_complex(const InverseSystem& s, const Caps& caps) {
    RoosLayout lay = roos_layout(s, caps);
    if (lay.ranks.empty()) return CochainComplex::build(0, {}, {}, s.ring());

    std::vector<Matrix> diffs;
    for (size_t deg = 0; deg + 1 < lay.ranks.size(); ++deg) {
        Matrix d(lay.ranks[deg + 1], lay.ranks[deg], s.ring());
        const auto& lo_chains = lay.chains[deg];
        const auto& hi_chains = lay.chains[deg + 1];
        // index of each low chain for fast face lookup
        std::map<std::vector<size_t>, size_t> lo_index;
        for (size_t i = 0; i < lo_chains.size(); ++i) lo_index.emplace(lo_chains[i], i);

        for (size_t hc = 0; hc < hi_chains.size(); ++hc) {
            const auto& chain = hi_chains[hc];
            size_t row0 = lay.offsets[deg + 1][hc];
            size_t dim_target = s.term_rank(chain.front());
            for (size_t omit = 0; omit < chain.size(); ++omit) {
                std::vector<size_t> face = chain;
                face.erase(face.begin() + long(omit));
                size_t fi = lo_index.at(face);
                size_t col0 = lay.offsets[deg][fi];
                if (omit == 0) {
                    // face bottom is chain[1]; apply the transition into chain[0]
                    Matrix p = s.map_for(chain[0], chain[1]);
                    for (size_t i = 0; i < dim_target; ++i)
                        for (size_t j = 0; j < p.cols(); ++j)
                            if (p.at(i, j) != 0) d.at(row0 + i, col0 + j) = p.at(i, j);
                } else {
                    Int sign = (omit % 2 == 0) ? 1 : -1;
                    for (size_t i = 0; i < dim_target; ++i) d.at(row0 + i, col0 + i) = sign;
                }
            }
        }
        d.normalize();
        diffs.push_back(std::move(d));
    }
    return CochainComplex::build(0, lay.ranks, std::move(diffs), s.ring());
}

Matrix limit_kernel(const InverseSystem& s, const Caps& caps) {
    CochainComplex c = roos_complex(s, caps);
    if (c.empty()) return Matrix(0, 0, s.ring());
    return kernel_basis(c.differential_at(0));
}

FinAbGroup derived_limit(const InverseSystem& s, int n, const Caps& caps) {
    CochainComplex c = roos_complex(s, caps);
    FinAbGroup h = c.cohomology_at(n);
    if (n == 0) {
        // cross-check lim^0 against the compatible-families kernel, counted
        // by an elimination that shares nothing with the Smith route
        size_t expected = c.rank_at(0) -
                          (s.ring().is_field() ? fp::rank(c.differential_at(0))
                                               : rank_rational(c.differential_at(0)));
        verify(h.free_rank == expected && h.torsion.empty(),
               "lim^0 disagrees with the compatible-families kernel");
    }
    return h;
}

std::vector<FinAbGroup> derived_limits(const InverseSystem& s, int nmax, const Caps& caps) {
    CochainComplex c = roos_complex(s, caps);
    std::vector<FinAbGroup> out;
    for (int n = 0; n <= nmax; ++n) out.push_back(c.cohomology_at(n));
    return out;
}

namespace {

// Surjectivity of lim s -> lim (s|sub) where sub is a down-closed index list.
bool restriction_onto(const InverseSystem& s, const Matrix& lim_full,
                      const std::vector<size_t>& sub, const Caps& caps) {
    if (sub.empty()) return true;
    InverseSystem r = s.restrict(sub);
    Matrix lim_sub = limit_kernel(r, caps);
    if (lim_sub.cols() == 0) return true;

    // degree-0 blocks: offsets over all elements vs. over the subset
    std::vector<size_t> off_full(s.poset().size(), 0);
    {
        size_t acc = 0;
        for (size_t x = 0; x < s.poset().size(); ++x) {
            off_full[x] = acc;
            acc += s.term_rank(x);
        }
    }
    std::vector<size_t> off_sub(sub.size(), 0);
    {
        size_t acc = 0;
        for (size_t i = 0; i < sub.size(); ++i) {
            off_sub[i] = acc;
            acc += s.term_rank(sub[i]);
        }
    }

    // project the generators of lim s onto the subset coordinates
    Matrix proj(lim_sub.rows(), lim_full.cols(), s.ring());
    for (size_t g = 0; g < lim_full.cols(); ++g)
        for (size_t i = 0; i < sub.size(); ++i)
            for (size_t k = 0; k < s.term_rank(sub[i]); ++k)
                proj.at(off_sub[i] + k, g) = lim_full.at(off_full[sub[i]] + k, g);

    // express each projected generator in the basis of lim(s|sub) and ask
    // whether they span: cokernel of the coefficient matrix must vanish
    Matrix coeff(lim_sub.cols(), proj.cols(), s.ring());
    for (size_t g = 0; g < proj.cols(); ++g) {
        std::vector<Int> col(proj.rows());
        for (size_t i = 0; i < proj.rows(); ++i) col[i] = proj.at(i, g);
        auto sol = solve_integer_system(lim_sub, col);
        verify(sol.has_value(), "restricted compatible family escapes the restricted limit");
        for (size_t i = 0; i < lim_sub.cols(); ++i) coeff.at(i, g) = (*sol)[i];
    }
    return cokernel(coeff).is_trivial();
}

}  // namespace

FlasqueReport is_flasque(const InverseSystem& s, const Caps& caps,
                         const std::vector<std::vector<size_t>>* sampled) {
    std::vector<std::vector<size_t>> subsets;
    if (sampled) {
        for (const auto& sub : *sampled) {
            require(s.poset().is_down_closed(sub), "sampled subset is not down-closed");
            subsets.push_back(sub);
        }
    } else {
        subsets = s.poset().down_sets(caps.max_subsets);
    }
    Matrix lim_full = limit_kernel(s, caps);
    for (const auto& sub : subsets) {
        if (sub.size() == s.poset().size()) continue;
        if (!restriction_onto(s, lim_full, sub, caps)) return FlasqueReport{false, sub};
    }
    return FlasqueReport{true, std::nullopt};
}

InverseSystem restrict_cofinal(const InverseSystem& s, const std::vector<size_t>& subset) {
    return s.restrict(subset);
}

}  // namespace dlim
