#include <doctest.h>

#include <random>

#include "dlim/recfam.hpp"
#include "dlim/walks.hpp"

using namespace dlim;

namespace {
Ord O(const std::string& s) { return Ord::parse(s); }

Ord random_ord_below(std::mt19937_64& rng, const Ord& cap) {
    for (;;) {
        Ord x;
        for (int32_t e = int32_t(cap.degree()); e >= 0; --e) {
            uint64_t c = rng() % 3;
            if (c) x = x.plus(Ord::omega_pow(uint32_t(e), c));
        }
        if (x < cap) return x;
    }
}
}  // namespace

TEST_CASE("ordinal arithmetic in Cantor normal form") {
    CHECK(O("0").is_zero());
    CHECK(O("5").is_successor());
    CHECK(O("w").is_limit());
    CHECK(O("w^2*3+w+5").str() == "w^2*3+w+5");
    CHECK(O("w").plus(O("5")).str() == "w+5");
    CHECK(O("5").plus(O("w")).str() == "w");  // left absorption
    CHECK(O("w+5").plus(O("w")).str() == "w*2");
    CHECK(O("w^2").plus(O("w*3+1")).str() == "w^2+w*3+1");
    CHECK(O("w*2") < O("w^2"));
    CHECK(O("w+1") < O("w*2"));
    CHECK(O("3") < O("w"));
    CHECK(O("w^2*2").succ().pred() == O("w^2*2"));
    CHECK(*O("w*2+3").minus_prefix(O("w")) == O("w+3"));
    CHECK(*O("w^2").minus_prefix(O("w^2")) == O("0"));
    CHECK(*O("w^2+w").minus_prefix(O("w^2")) == O("w"));
    CHECK(!O("w").minus_prefix(O("w^2")).has_value());
    CHECK_THROWS_AS(O("w^1+w^2"), ValidationError);
    CHECK_THROWS_AS(O(""), ValidationError);
}

TEST_CASE("canonical ladders") {
    // C_w = <0, 1, 2, ...>
    CHECK(Ladder::at(O("w"), 0) == O("0"));
    CHECK(Ladder::at(O("w"), 3) == O("3"));
    // C_(w*2) starts at w
    CHECK(Ladder::at(O("w*2"), 0) == O("w"));
    CHECK(Ladder::at(O("w*2"), 4) == O("w+4"));
    // C_(w^2) climbs by w
    CHECK(Ladder::at(O("w^2"), 0) == O("0"));
    CHECK(Ladder::at(O("w^2"), 3) == O("w*3"));
    // successors
    CHECK(Ladder::at(O("7"), 0) == O("6"));
    // strictly increasing with supremum: spot checks
    for (const char* g : {"w", "w*2", "w^2", "w^2+w", "w^3"}) {
        Ord go = O(g);
        for (uint64_t k = 0; k + 1 < 6; ++k) {
            CHECK(Ladder::at(go, k) < Ladder::at(go, k + 1));
            CHECK(Ladder::at(go, k) < go);
        }
    }
    CHECK(Ladder::contains(O("w^2"), O("w*5")));
    CHECK(!Ladder::contains(O("w^2"), O("w+1")));
    CHECK(Ladder::count_below(O("w"), O("4")) == 4);
    CHECK(Ladder::count_below(O("w^2"), O("w*3+2")) == 4);  // 0, w, w*2, w*3
}

TEST_CASE("rho1 on the named examples") {
    WalkContext ctx;
    SUBCASE("rho1(xi, xi) = 0") {
        for (const char* s : {"0", "5", "w", "w^2+w*2"}) CHECK(ctx.rho1(O(s), O(s)) == 0);
    }
    SUBCASE("rho1(n, w) = n with the zero-based ladder") {
        for (uint64_t n = 0; n < 12; ++n)
            CHECK(ctx.rho1(Ord::finite(n), O("w")) == n);
    }
    SUBCASE("rho1(alpha, alpha + 1) = 0") {
        for (const char* s : {"0", "3", "w", "w*2+1", "w^2"})
            CHECK(ctx.rho1(O(s), O(s).succ()) == 0);
    }
    SUBCASE("memoized results equal fresh recomputation") {
        uint64_t a = ctx.rho1(O("w+3"), O("w^2*2"));
        WalkContext fresh;
        CHECK(a == fresh.rho1(O("w+3"), O("w^2*2")));
        CHECK(a == ctx.rho1(O("w+3"), O("w^2*2")));
    }
}

TEST_CASE("exact defect sets") {
    WalkContext ctx;
    SUBCASE("D(alpha, alpha) is empty") {
        CHECK(ctx.coherence_defect(O("w*2"), O("w*2")).empty());
    }
    SUBCASE("D(alpha, alpha + 1) is empty") {
        for (const char* s : {"w", "w*2", "w^2", "w^2+w"})
            CHECK(ctx.coherence_defect(O(s), O(s).succ()).empty());
    }
    SUBCASE("defect members disagree and sampled non-members agree") {
        std::mt19937_64 rng(17);
        Ord cap = O("w^3");
        for (int trial = 0; trial < 25; ++trial) {
            Ord a = random_ord_below(rng, cap), b = random_ord_below(rng, cap);
            if (b < a) std::swap(a, b);
            auto d = ctx.coherence_defect(a, b);
            for (const Ord& xi : d) {
                CHECK(xi < a);
                CHECK(ctx.rho1(xi, a) != ctx.rho1(xi, b));
            }
            for (int probe = 0; probe < 20; ++probe) {
                Ord xi = random_ord_below(rng, a.is_zero() ? Ord::finite(1) : a);
                if (xi >= a || d.count(xi)) continue;
                CHECK(ctx.rho1(xi, a) == ctx.rho1(xi, b));
            }
        }
    }
    SUBCASE("triangle inclusion on sampled triples below w^3*3") {
        std::mt19937_64 rng(23);
        Ord cap = O("w^3*3");
        WalkContext big(O("w^6"));
        for (int trial = 0; trial < 500; ++trial) {
            Ord a = random_ord_below(rng, cap), b = random_ord_below(rng, cap),
                c = random_ord_below(rng, cap);
            if (b < a) std::swap(a, b);
            if (c < b) std::swap(b, c);
            if (b < a) std::swap(a, b);
            auto dac = big.coherence_defect(a, c);
            auto dab = big.coherence_defect(a, b);
            auto dbc = big.coherence_defect(b, c);
            for (const Ord& xi : dac) {
                bool covered = dab.count(xi) || (dbc.count(xi) && xi < a);
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("sublevel sets and fibers") {
    WalkContext ctx;
    SUBCASE("sublevel members satisfy the bound, boundary points do not") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 15; ++trial) {
            Ord a = random_ord_below(rng, O("w^3"));
            if (a.is_zero()) continue;
            for (uint64_t bound : {1, 3}) {
                auto s = ctx.sublevel(a, bound);
                for (const Ord& xi : s) CHECK(ctx.rho1(xi, a) < bound);
                for (int probe = 0; probe < 15; ++probe) {
                    Ord xi = random_ord_below(rng, a);
                    if (xi >= a || s.count(xi)) continue;
                    CHECK(ctx.rho1(xi, a) >= bound);
                }
            }
        }
    }
    SUBCASE("fibers partition by value") {
        Ord b = O("w^2+w*2");
        for (uint64_t k = 0; k < 4; ++k)
            for (const Ord& xi : ctx.fiber(b, k)) CHECK(ctx.rho1(xi, b) == k);
    }
    SUBCASE("e is total and zero on the diagonal across a sweep") {
        Ord b = O("w^2");
        auto s0 = ctx.sublevel(b, 1);
        // e_b(xi) = 0 exactly on the sublevel-1 set; it contains the first rung
        CHECK(s0.count(O("0")));
    }
}

TEST_CASE("tau and phi") {
    WalkContext ctx;
    SUBCASE("empty function gives an empty phi") {
        IndexedOrdFunction f;
        auto tp = build_tau_phi(ctx, f);
        CHECK(tp.phi.empty());
        CHECK(tp.sp == O("0"));
    }
    SUBCASE("each column of tau has exactly one 1") {
        Ord gamma = O("w*3");
        for (const char* xs : {"0", "5", "w", "w+7", "w*2", "w*2+1"}) {
            Ord xi = O(xs);
            int ones = 0;
            for (uint64_t i = 0; i < 25; ++i) ones += tau(ctx, gamma, i, xi);
            CHECK(ones == 1);  // e_gamma(xi) < 25 at this scale
        }
    }
    SUBCASE("phi_f = tau_sp(f) on X(f), and f <= g differences sit inside the defect") {
        std::mt19937_64 rng(47);
        for (int trial = 0; trial < 40; ++trial) {
            IndexedOrdFunction f, g;
            Ord cap = O("w^2*2");
            for (uint64_t i = 0; i < 3; ++i) {
                std::vector<Ord> fx, gx;
                for (int k = 0; k < 3; ++k) {
                    Ord x = random_ord_below(rng, cap);
                    gx.push_back(x);
                    if (rng() % 2) fx.push_back(x);
                }
                f.rows.push_back({i, fx});
                g.rows.push_back({i, gx});
            }
            REQUIRE(f.leq(g));
            auto tf = build_tau_phi(ctx, f);
            auto tg = build_tau_phi(ctx, g);
            CHECK(tf.sp <= tg.sp);
            auto defect = ctx.coherence_defect(tf.sp, tg.sp);
            for (const auto& [pt, v] : tf.phi) {
                int gv = tau(ctx, tg.sp, pt.first, pt.second);
                if (v != gv) {
                    bool explained = defect.count(pt.second) ||
                                     (pt.second >= tf.sp && pt.second <= tg.sp);
                    CHECK(explained);
                }
            }
        }
    }
}

TEST_CASE("recursive base family") {
    Ring f2 = Ring::Fp(2);
    SUBCASE("bound w: all stages are zero extensions") {
        BaseFamilyRecursion fam(O("w"), f2);
        for (uint64_t stage = 1; stage < 8; ++stage)
            for (uint64_t row = 0; row < 10; ++row)
                for (uint64_t col = 0; col < stage; ++col)
                    CHECK(fam.eval(Ord::finite(stage), Ord::finite(row), Ord::finite(col)) == 0);
        CHECK(fam.stages().empty());
    }
    SUBCASE("bound w*2: the chi insertion at stage w") {
        BaseFamilyRecursion fam(O("w*2"), f2);
        for (uint64_t col = 0; col < 10; ++col) {
            CHECK(fam.eval(O("w"), O("w"), Ord::finite(col)) == 1);  // C_w hits every natural
            CHECK(fam.eval(O("w"), Ord::finite(3), Ord::finite(col)) == 0);
            CHECK(fam.eval(O("w"), O("w+1"), Ord::finite(col)) == 0);
        }
        CHECK(fam.check_chi_insertion(O("w"), {O("0"), O("3"), O("7")}));
        CHECK(fam.stages().count(O("w")) == 1);
        // successor stages extend by zero
        CHECK(fam.eval(O("w+2"), O("w"), O("5")) == 1);
        CHECK(fam.eval(O("w+2"), O("w"), O("w")) == 0);
        CHECK(fam.eval(O("w+2"), O("w"), O("w+1")) == 0);
    }
    SUBCASE("bound w^2: ladder rows carry the earlier insertions exactly") {
        BaseFamilyRecursion fam(O("w^2"), f2);
        // at stage w*3, row w*2 shows the characteristic function of C_(w*2)
        CHECK(fam.eval(O("w*3"), O("w*2"), O("w+4")) == 1);   // w+4 in C_(w*2)
        CHECK(fam.eval(O("w*3"), O("w*2"), O("4")) == 0);     // 4 not in C_(w*2)
        CHECK(fam.eval(O("w*3"), O("w"), O("4")) == 1);       // row w keeps C_w
        CHECK(fam.eval(O("w*3"), O("w*3"), O("w*2+1")) == 1); // its own chi row
        auto rows = fam.row_support(O("w*3+5"));
        CHECK(rows == std::vector<Ord>{O("w"), O("w*2"), O("w*3")});
    }
    SUBCASE("support invariant at every probed stage up to w^2") {
        BaseFamilyRecursion fam(O("w^2"), f2);
        std::vector<Ord> probes{O("0"), O("1"), O("5"), O("w"), O("w+1"), O("w*2"),
                                O("w*3"), O("w*4"), O("w*4+2")};
        for (uint64_t k = 1; k <= 4; ++k) {
            Ord stage = Ord::omega_pow(1, k);
            CHECK(fam.check_support_invariant(stage, probes, probes));
            CHECK(fam.check_chi_insertion(stage, probes));
        }
    }
    SUBCASE("determinism across fresh contexts") {
        BaseFamilyRecursion a(O("w^2"), f2), b(O("w^2"), f2);
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            Ord stage = Ord::omega_pow(1, 1 + rng() % 4).plus(Ord::finite(rng() % 3));
            Ord row = random_ord_below(rng, O("w^2"));
            Ord col = random_ord_below(rng, stage);
            if (!(col < stage)) continue;
            CHECK(a.eval(stage, row, col) == b.eval(stage, row, col));
        }
    }
    SUBCASE("bounds are enforced") {
        BaseFamilyRecursion fam(O("w*2"), f2);
        CHECK_THROWS_AS(fam.eval(O("w^2"), O("0"), O("1")), CapExceeded);
        CHECK_THROWS_AS(fam.eval(O("w"), O("0"), O("w")), ValidationError);
        CHECK_THROWS_AS(BaseFamilyRecursion(O("w"), Ring::Z()), ValidationError);
    }
}

TEST_CASE("walk cache round-trips through the cache directory") {
    std::string dir = "build/test_walk_cache";
    {
        WalkContext ctx(O("w^4"), dir);
        ctx.rho1(O("w+3"), O("w^2*2"));
    }
    WalkContext back(O("w^4"), dir);
    CHECK(back.memo_size() > 0);
    CHECK(back.rho1(O("w+3"), O("w^2*2")) == WalkContext().rho1(O("w+3"), O("w^2*2")));
}
