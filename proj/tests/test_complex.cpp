#include <doctest.h>

#include <random>

#include "dlim/cochain.hpp"
#include "dlim/system.hpp"
#include "generators.hpp"

using namespace dlim;

namespace {
Matrix mat1(long long v, Ring ring = Ring::Z()) {
    Matrix m(1, 1, ring);
    m.at(0, 0) = v;
    m.normalize();
    return m;
}
}  // namespace

TEST_CASE("complex construction") {
    SUBCASE("single degree, no differentials") {
        auto c = CochainComplex::build(0, {1}, {}, Ring::Z());
        CHECK(c.rank_at(0) == 1);
        CHECK(c.rank_at(1) == 0);
    }
    SUBCASE("0 -> Z -> Z -> 0 with times two") {
        auto c = CochainComplex::build(0, {1, 1}, {mat1(2)}, Ring::Z());
        CHECK(c.hi() == 1);
    }
    SUBCASE("d o d != 0 is rejected with a located witness") {
        Matrix d0 = mat1(1), d1 = mat1(1);
        CHECK_THROWS_WITH_AS(CochainComplex::build(0, {1, 1, 1}, {d0, d1}, Ring::Z()),
                             doctest::Contains("degree 0"), ValidationError);
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(CochainComplex::build(0, {1, 2}, {mat1(1)}, Ring::Z()), ValidationError);
    }
}

TEST_CASE("cohomology of tiny complexes") {
    SUBCASE("Z concentrated in degree 0") {
        auto c = CochainComplex::build(0, {1}, {}, Ring::Z());
        CHECK(c.cohomology_at(0) == FinAbGroup::free(1));
        CHECK(c.cohomology_at(1).is_trivial());
        CHECK(c.cohomology_at(-1).is_trivial());
        CHECK(c.cohomology_at(7).is_trivial());
    }
    SUBCASE("times two gives Z/2 in degree 1") {
        auto c = CochainComplex::build(0, {1, 1}, {mat1(2)}, Ring::Z());
        CHECK(c.cohomology_at(0).is_trivial());
        CHECK(c.cohomology_at(1) == FinAbGroup(0, {2}));
    }
    SUBCASE("empty complex") {
        auto c = CochainComplex::build(0, {}, {}, Ring::Z());
        CHECK(c.cohomology_at(0).is_trivial());
    }
}

TEST_CASE("euler characteristic is conserved") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        auto sys = gens::random_system(rng, 2 + rng() % 4, 1 + rng() % 2, Ring::Z());
        auto c = roos_complex(sys);
        CHECK(c.euler_characteristic_ranks() == c.euler_characteristic_cohomology());
    }
}

TEST_CASE("field dimensions by two routes on random complexes") {
    std::mt19937_64 rng(88);
    for (uint32_t p : {2u, 3u}) {
        Ring f = Ring::Fp(p);
        for (int trial = 0; trial < 10; ++trial) {
            auto sys = gens::random_system(rng, 2 + rng() % 4, 1 + rng() % 2, f);
            auto c = roos_complex(sys);
            size_t total = 0;
            for (int n = c.lo(); n <= c.hi(); ++n) total += c.rank_at(n);
            if (total > 64) continue;
            for (int n = c.lo(); n <= c.hi(); ++n) {
                CHECK(c.cohomology_dim_gauss(n) == c.cohomology_dim_fp_smith(n, p));
                CHECK(c.cohomology_at(n).free_rank == c.cohomology_dim_gauss(n));
            }
        }
    }
}

TEST_CASE("universal coefficients spot check") {
    // dim_Fp H^n(C (x) Fp) = free rank H^n + p-torsion count of H^n + H^(n+1)
    std::mt19937_64 rng(123);
    auto p_torsion_count = [](const FinAbGroup& g, uint32_t p) {
        size_t c = 0;
        for (const auto& t : g.torsion)
            if (t % p == 0) ++c;
        return c;
    };
    for (int trial = 0; trial < 10; ++trial) {
        auto sys = gens::random_system(rng, 2 + rng() % 3, 1 + rng() % 2, Ring::Z());
        auto cz = roos_complex(sys);
        for (uint32_t p : {2u, 3u}) {
            auto cp = cz.with_ring(Ring::Fp(p));
            for (int n = cz.lo(); n <= cz.hi(); ++n) {
                FinAbGroup hn = cz.cohomology_at(n);
                FinAbGroup hn1 = cz.cohomology_at(n + 1);
                size_t expect = hn.free_rank + p_torsion_count(hn, p) + p_torsion_count(hn1, p);
                CHECK(cp.cohomology_dim_gauss(n) == expect);
            }
        }
    }
}
