#include "dlim/xsys.hpp"

#include <algorithm>

namespace dlim {

namespace {

std::vector<size_t> mask_coords(uint64_t mask, size_t ground_size) {
    std::vector<size_t> c;
    for (size_t i = 0; i < ground_size; ++i)
        if (mask >> i & 1) c.push_back(i);
    return c;
}

std::string set_label(const std::vector<std::string>& ground, uint64_t mask) {
    std::string s = "{";
    bool first = true;
    for (size_t i = 0; i < ground.size(); ++i)
        if (mask >> i & 1) {
            s += (first ? "" : ",") + ground[i];
            first = false;
        }
    return s + "}";
}

// restriction matrix H^(coords of from) -> H^(coords of to), to <= from
Matrix restriction_map(uint64_t to, uint64_t from, size_t ground_size, size_t h_rank, Ring ring) {
    auto tc = mask_coords(to, ground_size);
    auto fc = mask_coords(from, ground_size);
    Matrix m(tc.size() * h_rank, fc.size() * h_rank, ring);
    for (size_t i = 0; i < tc.size(); ++i) {
        size_t j = size_t(std::lower_bound(fc.begin(), fc.end(), tc[i]) - fc.begin());
        for (size_t h = 0; h < h_rank; ++h) m.at(i * h_rank + h, j * h_rank + h) = 1;
    }
    return m;
}

InverseSystem subsets_system(const std::vector<std::string>& ground,
                             const std::vector<uint64_t>& index_sets,
                             const std::vector<uint64_t>& term_masks, Ring ring, size_t h_rank) {
    std::vector<std::string> labels;
    labels.reserve(index_sets.size());
    for (uint64_t s : index_sets) labels.push_back(set_label(ground, s));
    std::vector<std::pair<size_t, size_t>> le;
    for (size_t i = 0; i < index_sets.size(); ++i)
        for (size_t j = 0; j < index_sets.size(); ++j)
            if (i != j && (index_sets[i] & ~index_sets[j]) == 0) {
                require(index_sets[i] != index_sets[j], "duplicate index set in the list");
                le.emplace_back(i, j);
            }
    Poset poset = Poset::build(std::move(labels), le);
    std::vector<size_t> ranks;
    std::map<std::pair<size_t, size_t>, Matrix> maps;
    for (uint64_t m : term_masks) ranks.push_back(mask_coords(m, ground.size()).size() * h_rank);
    for (size_t i = 0; i < index_sets.size(); ++i)
        for (size_t j = 0; j < index_sets.size(); ++j)
            if (poset.lt(i, j))
                maps.emplace(std::make_pair(i, j),
                             restriction_map(term_masks[i], term_masks[j], ground.size(), h_rank,
                                             ring));
    return InverseSystem::build(std::move(poset), std::move(ranks), maps, ring);
}

}  // namespace

InverseSystem build_x_system(const std::vector<std::string>& ground,
                             const std::vector<uint64_t>& index_sets, uint64_t jmax, Ring ring,
                             size_t h_rank, const Caps&) {
    std::vector<uint64_t> terms;
    terms.reserve(index_sets.size());
    for (uint64_t s : index_sets) terms.push_back(s & jmax);
    return subsets_system(ground, index_sets, terms, ring, h_rank);
}

InverseSystem build_b_system(const std::vector<std::string>& ground,
                             const std::vector<uint64_t>& index_sets, Ring ring, size_t h_rank,
                             const Caps&) {
    return subsets_system(ground, index_sets, index_sets, ring, h_rank);
}

InverseSystem build_q_system(const std::vector<std::string>& ground,
                             const std::vector<uint64_t>& index_sets, uint64_t jmax, Ring ring,
                             size_t h_rank, const Caps&) {
    std::vector<uint64_t> terms;
    terms.reserve(index_sets.size());
    for (uint64_t s : index_sets) terms.push_back(s & ~jmax);
    return subsets_system(ground, index_sets, terms, ring, h_rank);
}

AklIndex akl_index(size_t kappa, size_t lambda, size_t poset_cap) {
    require(kappa >= 1 && lambda >= 1, "kappa and lambda must be positive");
    size_t bits = kappa * lambda;
    require(bits <= 20, "kappa * lambda too large for the subset poset");
    size_t count = size_t(1) << bits;
    if (count > poset_cap)
        throw CapExceeded("function poset has " + std::to_string(count) +
                          " elements, cap is " + std::to_string(poset_cap));
    AklIndex idx;
    idx.kappa = kappa;
    idx.lambda = lambda;
    for (size_t i = 0; i < kappa; ++i)
        for (size_t j = 0; j < lambda; ++j)
            idx.ground.push_back(std::to_string(i) + "," + std::to_string(j));
    for (uint64_t m = 0; m < count; ++m) idx.index_sets.push_back(m);
    return idx;
}

AklSystems build_akl_systems(size_t kappa, size_t lambda, Ring ring, size_t h_rank,
                             const Caps& caps, size_t poset_cap) {
    AklIndex idx = akl_index(kappa, lambda, poset_cap);
    uint64_t full = (uint64_t(1) << idx.ground.size()) - 1;
    // At finite parameters every X(f) is finite, so the direct sum equals the
    // product: sub and mid agree rank for rank, and the quotient vanishes.
    InverseSystem a = build_x_system(idx.ground, idx.index_sets, full, ring, h_rank, caps);
    InverseSystem b = build_b_system(idx.ground, idx.index_sets, ring, h_rank, caps);
    InverseSystem q = build_q_system(idx.ground, idx.index_sets, full, ring, h_rank, caps);
    for (size_t x = 0; x < a.poset().size(); ++x) {
        verify(a.term_rank(x) == b.term_rank(x), "A_f and B_f differ at finite parameters");
        verify(q.term_rank(x) == 0, "quotient is nonzero at finite parameters");
    }
    std::vector<Matrix> inc, proj;
    for (size_t x = 0; x < a.poset().size(); ++x) {
        inc.push_back(Matrix::identity(a.term_rank(x), ring));
        proj.push_back(Matrix::zero(0, b.term_rank(x), ring));
    }
    SesOfSystems ses = SesOfSystems::build(std::move(a), std::move(b), std::move(q),
                                           std::move(inc), std::move(proj));
    return AklSystems{std::move(idx), std::move(ses)};
}

InverseSystem build_y_system(size_t kappa, const std::vector<std::string>& ground_x,
                             const std::vector<uint64_t>& itilde_generators, Ring ring,
                             const Caps&) {
    require(kappa >= 1, "kappa must be positive");
    // poset: the generators of the ideal ordered by containment; term at I is
    // the free module on kappa x I
    std::vector<std::string> labels;
    for (uint64_t s : itilde_generators) labels.push_back(set_label(ground_x, s));
    std::vector<std::pair<size_t, size_t>> le;
    for (size_t i = 0; i < itilde_generators.size(); ++i)
        for (size_t j = 0; j < itilde_generators.size(); ++j)
            if (i != j && (itilde_generators[i] & ~itilde_generators[j]) == 0) {
                require(itilde_generators[i] != itilde_generators[j],
                        "duplicate ideal generator");
                le.emplace_back(i, j);
            }
    Poset poset = Poset::build(std::move(labels), le);
    std::vector<size_t> ranks;
    for (uint64_t s : itilde_generators)
        ranks.push_back(kappa * mask_coords(s, ground_x.size()).size());
    std::map<std::pair<size_t, size_t>, Matrix> maps;
    for (size_t i = 0; i < itilde_generators.size(); ++i)
        for (size_t j = 0; j < itilde_generators.size(); ++j) {
            if (!poset.lt(i, j)) continue;
            auto ic = mask_coords(itilde_generators[i], ground_x.size());
            auto jc = mask_coords(itilde_generators[j], ground_x.size());
            Matrix m(kappa * ic.size(), kappa * jc.size(), ring);
            for (size_t a = 0; a < ic.size(); ++a) {
                size_t b = size_t(std::lower_bound(jc.begin(), jc.end(), ic[a]) - jc.begin());
                for (size_t k = 0; k < kappa; ++k) m.at(k * ic.size() + a, k * jc.size() + b) = 1;
            }
            maps.emplace(std::make_pair(i, j), std::move(m));
        }
    return InverseSystem::build(std::move(poset), std::move(ranks), maps, ring);
}

InverseSystem build_y_system_via_x(size_t kappa, const std::vector<std::string>& ground_x,
                                   const std::vector<uint64_t>& itilde_generators, Ring ring,
                                   const Caps& caps) {
    require(kappa * ground_x.size() <= 64, "kappa x X exceeds the 64-element ground cap");
    std::vector<std::string> ground;
    for (size_t k = 0; k < kappa; ++k)
        for (const auto& x : ground_x) ground.push_back(std::to_string(k) + "," + x);
    std::vector<uint64_t> sets;
    for (uint64_t s : itilde_generators) {
        uint64_t m = 0;
        for (size_t k = 0; k < kappa; ++k) m |= s << (k * ground_x.size());
        sets.push_back(m);
    }
    uint64_t jmax = ground.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << ground.size()) - 1;
    // the finite-first-coordinate ideal is improper at finite kappa
    return build_x_system(ground, sets, jmax, ring, 1, caps);
}

CoherentFamily cocycle_to_family(const std::vector<std::string>& ground,
                                 const std::vector<uint64_t>& index_sets, uint64_t jmax,
                                 Ring ring, size_t h_rank, size_t family_dim,
                                 const std::vector<Int>& cocycle, const Caps& caps) {
    require(family_dim >= 1, "family dimension must be at least 1");
    InverseSystem q = build_q_system(ground, index_sets, jmax, ring, h_rank, caps);
    RoosLayout lay = roos_layout(q, caps);
    size_t deg = family_dim - 1;
    size_t deg_rank = deg < lay.ranks.size() ? lay.ranks[deg] : 0;
    require(cocycle.size() == deg_rank, "cochain vector has length " +
                                            std::to_string(cocycle.size()) + ", expected " +
                                            std::to_string(deg_rank));
    // must be a cocycle of the quotient Roos complex
    if (deg_rank > 0) {
        CochainComplex rc = roos_complex(q, caps);
        auto img = rc.differential_at(int(deg)).apply(cocycle);
        for (const auto& v : img)
            require(v == 0, "not a cocycle: differential is nonzero");
    }

    CoherentFamily fam = CoherentFamily::make(family_dim, ground, index_sets, jmax, ring, h_rank);
    if (deg_rank == 0) return fam;
    const auto& chains = lay.chains[deg];
    for (size_t ci = 0; ci < chains.size(); ++ci) {
        const auto& chain = chains[ci];  // ascending in the containment order
        uint64_t bottom = index_sets[chain.front()];
        uint64_t inter = fam.tuple_intersection(chain);
        verify(inter == bottom, "chain intersection is not the bottom set");
        auto bot_out = mask_coords(bottom & ~jmax, ground.size());
        auto all = mask_coords(bottom, ground.size());
        std::vector<Int> value(all.size() * h_rank, 0);
        bool nonzero = false;
        for (size_t k = 0; k < bot_out.size(); ++k) {
            size_t pos = size_t(std::lower_bound(all.begin(), all.end(), bot_out[k]) - all.begin());
            for (size_t h = 0; h < h_rank; ++h) {
                value[pos * h_rank + h] = cocycle[lay.offsets[deg][ci] + k * h_rank + h];
                nonzero = nonzero || value[pos * h_rank + h] != 0;
            }
        }
        if (nonzero) fam.set_value(chain, std::move(value));
    }
    return fam;
}

std::vector<Int> family_to_cocycle(const CoherentFamily& fam, const Caps& caps) {
    InverseSystem q =
        build_q_system(fam.ground, fam.index_sets, fam.jmax, fam.ring, fam.h_rank, caps);
    RoosLayout lay = roos_layout(q, caps);
    size_t deg = fam.n - 1;
    if (deg >= lay.ranks.size()) return {};
    std::vector<Int> z(lay.ranks[deg], 0);
    const auto& chains = lay.chains[deg];
    for (size_t ci = 0; ci < chains.size(); ++ci) {
        const auto& chain = chains[ci];
        uint64_t bottom = fam.index_sets[chain.front()];
        auto bot_out = mask_coords(bottom & ~fam.jmax, fam.ground.size());
        for (size_t k = 0; k < bot_out.size(); ++k)
            for (size_t h = 0; h < fam.h_rank; ++h)
                z[lay.offsets[deg][ci] + k * fam.h_rank + h] =
                    fam.value_at(chain, bot_out[k], h);
    }
    return z;
}

CoherentFamily extend_family(const CoherentFamily& fam, size_t kappa, size_t lambda, size_t mu,
                             size_t nu, size_t poset_cap) {
    require(mu >= kappa && nu >= lambda, "extension parameters must dominate the originals");
    AklIndex small = akl_index(kappa, lambda, poset_cap);
    require(fam.ground == small.ground && fam.index_sets == small.index_sets,
            "family is not indexed by the full function poset of (kappa,lambda)");
    if (mu == kappa && nu == lambda) return fam;
    AklIndex big = akl_index(mu, nu, poset_cap);
    // the modulus ideal transfers coordinatewise: a pair (i,j) of the small
    // grid keeps its membership, new pairs lie outside
    uint64_t big_jmax = 0;
    for (size_t i = 0; i < kappa; ++i)
        for (size_t j = 0; j < lambda; ++j)
            if (fam.jmax >> (i * lambda + j) & 1) big_jmax |= uint64_t(1) << (i * nu + j);
    CoherentFamily out =
        CoherentFamily::make(fam.n, big.ground, big.index_sets, big_jmax, fam.ring, fam.h_rank);

    auto restrict_mask = [&](uint64_t f_mask) {
        uint64_t g = 0;
        for (size_t i = 0; i < kappa; ++i)
            for (size_t j = 0; j < lambda; ++j)
                if (f_mask >> (i * nu + j) & 1) g |= uint64_t(1) << (i * lambda + j);
        return g;
    };

    for (const auto& tuple : out.tuples(out.n)) {
        // g-tuple positions in the small index list are the restricted masks
        std::vector<size_t> g_tuple;
        g_tuple.reserve(tuple.size());
        for (size_t t : tuple) g_tuple.push_back(size_t(restrict_mask(big.index_sets[t])));
        uint64_t inter_big = out.tuple_intersection(tuple);
        auto cs = mask_coords(inter_big, big.ground.size());
        std::vector<Int> value(cs.size() * fam.h_rank, 0);
        bool nonzero = false;
        for (size_t ci = 0; ci < cs.size(); ++ci) {
            size_t i = cs[ci] / nu, j = cs[ci] % nu;
            if (i >= kappa || j >= lambda) continue;  // zero on the new coordinates
            size_t small_coord = i * lambda + j;
            for (size_t h = 0; h < fam.h_rank; ++h) {
                Int v = fam.value_at(g_tuple, small_coord, h);
                value[ci * fam.h_rank + h] = v;
                nonzero = nonzero || v != 0;
            }
        }
        if (nonzero) out.set_value(tuple, std::move(value));
    }
    return out;
}

}  // namespace dlim
