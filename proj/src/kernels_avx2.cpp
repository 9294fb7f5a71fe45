// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma;
// callers must only reach it through the runtime dispatch in kernels.cpp.

#include "unruhsim/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace unruhsim::kernels {

namespace {

// acc += s * row, where s is a complex scalar (ar, ai broadcast) and row
// holds two interleaved complex numbers (re0, im0, re1, im1).
// fmaddsub puts ar*re - ai*im in the even lanes and ar*im + ai*re in the
// odd ones, which is exactly the complex product.
inline __m256d cplx_fmadd(__m256d acc, __m256d ar, __m256d ai, __m256d row) {
  const __m256d swapped = _mm256_permute_pd(row, 0b0101);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, row, _mm256_mul_pd(ai, swapped)));
}

}  // namespace

void matmul4_avx2(const cplx* a, const cplx* b, cplx* c) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (int i = 0; i < 4; ++i) {
    __m256d lo = _mm256_setzero_pd();
    __m256d hi = _mm256_setzero_pd();
    for (int k = 0; k < 4; ++k) {
      const __m256d ar = _mm256_broadcast_sd(ad + (i * 4 + k) * 2);
      const __m256d ai = _mm256_broadcast_sd(ad + (i * 4 + k) * 2 + 1);
      lo = cplx_fmadd(lo, ar, ai, _mm256_loadu_pd(bd + k * 8));
      hi = cplx_fmadd(hi, ar, ai, _mm256_loadu_pd(bd + k * 8 + 4));
    }
    _mm256_storeu_pd(cd + i * 8, lo);
    _mm256_storeu_pd(cd + i * 8 + 4, hi);
  }
}

void matmul4_acc_avx2(const cplx* a, const cplx* b, cplx* c) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (int i = 0; i < 4; ++i) {
    __m256d lo = _mm256_loadu_pd(cd + i * 8);
    __m256d hi = _mm256_loadu_pd(cd + i * 8 + 4);
    for (int k = 0; k < 4; ++k) {
      const __m256d ar = _mm256_broadcast_sd(ad + (i * 4 + k) * 2);
      const __m256d ai = _mm256_broadcast_sd(ad + (i * 4 + k) * 2 + 1);
      lo = cplx_fmadd(lo, ar, ai, _mm256_loadu_pd(bd + k * 8));
      hi = cplx_fmadd(hi, ar, ai, _mm256_loadu_pd(bd + k * 8 + 4));
    }
    _mm256_storeu_pd(cd + i * 8, lo);
    _mm256_storeu_pd(cd + i * 8 + 4, hi);
  }
}

}  // namespace unruhsim::kernels

#endif  // x86-64
