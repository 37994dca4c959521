#include "tph/simd/kernels.hpp"

namespace tph::simd {

bool avx2_available() noexcept {
#if defined(TPH_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() noexcept { return avx2_available() ? Isa::avx2 : Isa::scalar; }

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out) {
#if defined(TPH_HAVE_AVX2_KERNELS)
  if (avx2_available()) return avx2::horner_eval(coeffs, points, out);
#endif
  scalar::horner_eval(coeffs, points, out);
}

void cmatvec(const cplx* m, std::size_t rows, std::size_t cols, std::size_t ld, const cplx* x,
             cplx* y) {
#if defined(TPH_HAVE_AVX2_KERNELS)
  if (avx2_available()) return avx2::cmatvec(m, rows, cols, ld, x, y);
#endif
  scalar::cmatvec(m, rows, cols, ld, x, y);
}

}  // namespace tph::simd
