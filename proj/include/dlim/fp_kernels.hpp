#pragma once
#include <cstddef>
#include <cstdint>

namespace dlim::fpk {

// Row kernels for mod-p elimination.  Entries live in [0, p) with p < 2^25,
// so products fit exactly in a double; the AVX2 variant exploits that.
// dst[i] = (dst[i] + c * src[i]) mod p
using AxpyFn = void (*)(uint32_t* dst, const uint32_t* src, size_t n, uint32_t c, uint32_t p);
// v[i] = (c * v[i]) mod p
using ScaleFn = void (*)(uint32_t* v, size_t n, uint32_t c, uint32_t p);

void axpy_scalar(uint32_t* dst, const uint32_t* src, size_t n, uint32_t c, uint32_t p);
void scale_scalar(uint32_t* v, size_t n, uint32_t c, uint32_t p);

#ifdef DLIM_HAVE_AVX2_TU
void axpy_avx2(uint32_t* dst, const uint32_t* src, size_t n, uint32_t c, uint32_t p);
void scale_avx2(uint32_t* v, size_t n, uint32_t c, uint32_t p);
#endif

// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available();

// Selected once at first use; force_scalar() pins the reference kernels
// (used by the equivalence tests).
AxpyFn axpy();
ScaleFn scale();
void force_scalar(bool on);

const char* active_kernel_name();

uint32_t inv_mod(uint32_t a, uint32_t p);

}  // namespace dlim::fpk
