#pragma once

// Data-parallel inner loops. Each kernel has a portable scalar reference and,
// on x86-64, an AVX2+FMA variant; the unqualified entry points dispatch once
// at first use based on CPUID.

#include <complex>
#include <cstddef>
#include <span>

namespace tph::simd {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

bool avx2_available() noexcept;
Isa active_isa() noexcept;
const char* isa_name(Isa isa) noexcept;

/// out[i] = sum_k coeffs[k] * points[i]^k (ascending coefficients, Horner).
void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out);

/// y = M x for a column-major rows x cols matrix with leading dimension ld.
void cmatvec(const cplx* m, std::size_t rows, std::size_t cols, std::size_t ld, const cplx* x,
             cplx* y);

namespace scalar {
void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out);
void cmatvec(const cplx* m, std::size_t rows, std::size_t cols, std::size_t ld, const cplx* x,
             cplx* y);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TPH_HAVE_AVX2_KERNELS 1
namespace avx2 {
void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out);
void cmatvec(const cplx* m, std::size_t rows, std::size_t cols, std::size_t ld, const cplx* x,
             cplx* y);
}  // namespace avx2
#endif

}  // namespace tph::simd
