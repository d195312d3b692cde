#include "dlim/fp_kernels.hpp"

#include <atomic>

namespace dlim::fpk {

void axpy_scalar(uint32_t* dst, const uint32_t* src, size_t n, uint32_t c, uint32_t p) {
    for (size_t i = 0; i < n; ++i) {
        uint64_t t = dst[i] + uint64_t(c) * src[i];
        dst[i] = uint32_t(t % p);
    }
}

void scale_scalar(uint32_t* v, size_t n, uint32_t c, uint32_t p) {
    for (size_t i = 0; i < n; ++i) v[i] = uint32_t(uint64_t(c) * v[i] % p);
}

bool avx2_available() {
#ifdef DLIM_HAVE_AVX2_TU
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {
std::atomic<bool> g_force_scalar{false};
}

void force_scalar(bool on) { g_force_scalar.store(on); }

AxpyFn axpy() {
#ifdef DLIM_HAVE_AVX2_TU
    if (!g_force_scalar.load() && avx2_available()) return axpy_avx2;
#endif
    return axpy_scalar;
}

ScaleFn scale() {
#ifdef DLIM_HAVE_AVX2_TU
    if (!g_force_scalar.load() && avx2_available()) return scale_avx2;
#endif
    return scale_scalar;
}

const char* active_kernel_name() {
    return axpy() == axpy_scalar ? "scalar" : "avx2";
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    // extended Euclid; p prime and a != 0 mod p
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return uint32_t(t);
}

}  // namespace dlim::fpk
