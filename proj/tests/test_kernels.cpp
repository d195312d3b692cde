#include <doctest.h>

#include <random>

#include "dlim/fp_kernels.hpp"
#include "dlim/fpmat.hpp"
#include "generators.hpp"

using namespace dlim;

TEST_CASE("scalar and dispatched axpy kernels agree") {
    std::mt19937_64 rng(42);
    for (uint32_t p : {2u, 3u, 5u, 7u, 97u, 8191u, 33554393u}) {
        for (size_t n : {size_t(1), size_t(7), size_t(64), size_t(1000)}) {
            std::vector<uint32_t> dst(n), src(n);
            for (auto& x : dst) x = uint32_t(rng() % p);
            for (auto& x : src) x = uint32_t(rng() % p);
            uint32_t c = uint32_t(rng() % p);
            std::vector<uint32_t> ref = dst, out = dst;
            fpk::axpy_scalar(ref.data(), src.data(), n, c, p);
            fpk::force_scalar(false);
            fpk::axpy()(out.data(), src.data(), n, c, p);
            CHECK(ref == out);
            std::vector<uint32_t> sref = src, sout = src;
            fpk::scale_scalar(sref.data(), n, c, p);
            fpk::scale()(sout.data(), n, c, p);
            CHECK(sref == sout);
        }
    }
}

TEST_CASE("elimination results are kernel-independent") {
    std::mt19937_64 rng(43);
    Ring f7 = Ring::Fp(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = gens::random_matrix(rng, 1 + rng() % 20, 1 + rng() % 20, 0, 6, f7);
        fpk::force_scalar(true);
        size_t r1 = fp::rank(a);
        fpk::force_scalar(false);
        size_t r2 = fp::rank(a);
        CHECK(r1 == r2);
    }
    fpk::force_scalar(false);
}

TEST_CASE("modular inverse") {
    for (uint32_t p : {2u, 3u, 101u, 65537u}) {
        for (uint32_t a = 1; a < std::min(p, 50u); ++a) {
            uint32_t inv = fpk::inv_mod(a, p);
            CHECK(uint64_t(a) * inv % p == 1);
        }
    }
}

TEST_CASE("active kernel is reported") {
    fpk::force_scalar(false);
    if (fpk::avx2_available())
        CHECK(std::string(fpk::active_kernel_name()) == "avx2");
    else
        CHECK(std::string(fpk::active_kernel_name()) == "scalar");
}
