// AVX2 variants of the mod-p row kernels.  Entries and multipliers are below
// 2^25, so c*src + dst < 2^51 is exactly representable in a double; the
// remainder is recovered with a floored division estimate and at most two
// lane-wise fixups.  Compiled only in this translation unit (-mavx2); the
// dispatcher guards every call with a CPU check.
#include <immintrin.h>

#include "dlim/fp_kernels.hpp"

namespace dlim::fpk {

namespace {

inline __m256d mod_reduce(__m256d t, __m256d vp, __m256d vinvp) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinvp));
    __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(q, vp));
    // q may be off by one in either direction
    __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(neg, vp));
    __m256d big = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
    r = _mm256_sub_pd(r, _mm256_and_pd(big, vp));
    return r;
}

}  // namespace

void axpy_avx2(uint32_t* dst, const uint32_t* src, size_t n, uint32_t c, uint32_t p) {
    const __m256d vc = _mm256_set1_pd(double(c));
    const __m256d vp = _mm256_set1_pd(double(p));
    const __m256d vinvp = _mm256_set1_pd(1.0 / double(p));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i s32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
        __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
        __m256d s = _mm256_cvtepi32_pd(s32);
        __m256d d = _mm256_cvtepi32_pd(d32);
        __m256d t = _mm256_add_pd(d, _mm256_mul_pd(vc, s));
        __m256d r = mod_reduce(t, vp, vinvp);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
    }
    if (i < n) axpy_scalar(dst + i, src + i, n - i, c, p);
}

void scale_avx2(uint32_t* v, size_t n, uint32_t c, uint32_t p) {
    const __m256d vc = _mm256_set1_pd(double(c));
    const __m256d vp = _mm256_set1_pd(double(p));
    const __m256d vinvp = _mm256_set1_pd(1.0 / double(p));
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i x32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i));
        __m256d x = _mm256_cvtepi32_pd(x32);
        __m256d t = _mm256_mul_pd(vc, x);
        __m256d r = mod_reduce(t, vp, vinvp);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(v + i), _mm256_cvttpd_epi32(r));
    }
    if (i < n) scale_scalar(v + i, n - i, c, p);
}

}  // namespace dlim::fpk
