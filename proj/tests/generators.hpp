// Seeded test-data generators.
#pragma once
#include <random>

#include "dlim/system.hpp"

namespace gens {

using dlim::Int;
using dlim::Matrix;
using dlim::Ring;

inline Matrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int lo, int hi,
                            Ring ring = Ring::Z()) {
    Matrix m(rows, cols, ring);
    std::uniform_int_distribution<int> d(lo, hi);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    m.normalize();
    return m;
}

// Random poset on n elements: each pair i < j related with the given density
// (indices give a linear extension, so the closure is automatically acyclic).
inline dlim::Poset random_poset(std::mt19937_64& rng, size_t n, double density) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::pair<size_t, size_t>> pairs;
    std::bernoulli_distribution coin(density);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (coin(rng)) pairs.emplace_back(i, j);
    return dlim::Poset::build(std::move(labels), pairs);
}

// Functorial system over a poset: terms all of one rank, with transition map
// B^(h(y) - h(x)) for a fixed square matrix B and a strictly monotone height,
// so functoriality holds by construction.
inline dlim::InverseSystem power_system(std::mt19937_64& rng, const dlim::Poset& poset,
                                        size_t rank, Ring ring) {
    Matrix b = random_matrix(rng, rank, rank, -2, 2, ring);
    std::vector<size_t> height(poset.size(), 0);
    for (size_t x = 0; x < poset.size(); ++x)
        for (size_t y = 0; y < poset.size(); ++y)
            if (poset.lt(y, x)) height[x] = std::max(height[x], height[y] + 1);
    // precompute powers
    size_t hmax = 0;
    for (size_t h : height) hmax = std::max(hmax, h);
    std::vector<Matrix> pow{Matrix::identity(rank, ring)};
    for (size_t k = 1; k <= hmax; ++k) pow.push_back(pow.back().mul(b));
    std::map<std::pair<size_t, size_t>, Matrix> maps;
    for (size_t x = 0; x < poset.size(); ++x)
        for (size_t y = 0; y < poset.size(); ++y)
            if (poset.lt(x, y)) maps.emplace(std::make_pair(x, y), pow[height[y] - height[x]]);
    std::vector<size_t> ranks(poset.size(), rank);
    return dlim::InverseSystem::build(poset, ranks, maps, ring);
}

// Directed variant: a fresh top element is appended so the poset is directed
// (finite directed posets have a maximum).
inline dlim::InverseSystem random_directed_system(std::mt19937_64& rng, size_t n, size_t rank,
                                                  Ring ring) {
    dlim::Poset base = random_poset(rng, n, 0.4);
    std::vector<std::string> labels(base.labels());
    labels.push_back("top");
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < base.size(); ++i) {
        for (size_t j = 0; j < base.size(); ++j)
            if (base.lt(i, j)) pairs.emplace_back(i, j);
        pairs.emplace_back(i, base.size());
    }
    dlim::Poset poset = dlim::Poset::build(std::move(labels), pairs);
    return power_system(rng, poset, rank, ring);
}

inline dlim::InverseSystem random_system(std::mt19937_64& rng, size_t n, size_t rank, Ring ring) {
    return power_system(rng, random_poset(rng, n, 0.4), rank, ring);
}

}  // namespace gens
