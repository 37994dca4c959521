// Compiled with -mavx2 -mfma; only reached after the CPUID check in dispatch.cpp.

#include "tph/simd/kernels.hpp"

#if defined(TPH_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace tph::simd::avx2 {

namespace {

// (a0, a1) * (z0, z1) for two interleaved complex numbers per register.
inline __m256d cmul(__m256d a, __m256d z) {
  const __m256d zr = _mm256_movedup_pd(z);           // zr0 zr0 zr1 zr1
  const __m256d zi = _mm256_permute_pd(z, 0b1111);   // zi0 zi0 zi1 zi1
  const __m256d swapped = _mm256_permute_pd(a, 0b0101);  // ai0 ar0 ai1 ar1
  return _mm256_fmaddsub_pd(a, zr, _mm256_mul_pd(swapped, zi));
}

}  // namespace

void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out) {
  const std::size_t n = points.size();
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const std::size_t deg = coeffs.size() - 1;
  const auto* pts = reinterpret_cast<const double*>(points.data());
  auto* dst = reinterpret_cast<double*>(out.data());
  const auto* c = reinterpret_cast<const double*>(coeffs.data());

  std::size_t i = 0;
  // Four points per iteration in two registers.
  for (; i + 4 <= n; i += 4) {
    const __m256d z0 = _mm256_loadu_pd(pts + 2 * i);
    const __m256d z1 = _mm256_loadu_pd(pts + 2 * i + 4);
    const __m128d top = _mm_loadu_pd(c + 2 * deg);
    __m256d a0 = _mm256_broadcast_pd(&top);
    __m256d a1 = a0;
    for (std::size_t k = deg; k-- > 0;) {
      const __m128d ck = _mm_loadu_pd(c + 2 * k);
      const __m256d cb = _mm256_broadcast_pd(&ck);
      a0 = _mm256_add_pd(cmul(a0, z0), cb);
      a1 = _mm256_add_pd(cmul(a1, z1), cb);
    }
    _mm256_storeu_pd(dst + 2 * i, a0);
    _mm256_storeu_pd(dst + 2 * i + 4, a1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d z = _mm256_loadu_pd(pts + 2 * i);
    const __m128d top = _mm_loadu_pd(c + 2 * deg);
    __m256d a = _mm256_broadcast_pd(&top);
    for (std::size_t k = deg; k-- > 0;) {
      const __m128d ck = _mm_loadu_pd(c + 2 * k);
      a = _mm256_add_pd(cmul(a, z), _mm256_broadcast_pd(&ck));
    }
    _mm256_storeu_pd(dst + 2 * i, a);
  }
  if (i < n) scalar::horner_eval(coeffs, points.subspan(i), out.subspan(i));
}

void cmatvec(const cplx* m, std::size_t rows, std::size_t cols, std::size_t ld, const cplx* x,
             cplx* y) {
  auto* yd = reinterpret_cast<double*>(y);
  for (std::size_t j = 0; j < rows; ++j) y[j] = 0.0;
  const std::size_t vec_rows = rows & ~std::size_t{1};
  for (std::size_t k = 0; k < cols; ++k) {
    const auto* col = reinterpret_cast<const double*>(m + k * ld);
    const __m256d xr = _mm256_set1_pd(x[k].real());
    const __m256d xi = _mm256_set1_pd(x[k].imag());
    for (std::size_t j = 0; j < vec_rows; j += 2) {
      const __m256d a = _mm256_loadu_pd(col + 2 * j);
      const __m256d swapped = _mm256_permute_pd(a, 0b0101);
      const __m256d prod = _mm256_fmaddsub_pd(a, xr, _mm256_mul_pd(swapped, xi));
      _mm256_storeu_pd(yd + 2 * j, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * j), prod));
    }
    for (std::size_t j = vec_rows; j < rows; ++j) {
      const cplx a = m[k * ld + j];
      y[j] += cplx(a.real() * x[k].real() - a.imag() * x[k].imag(),
                   a.imag() * x[k].real() + a.real() * x[k].imag());
    }
  }
}

}  // namespace tph::simd::avx2

#endif
