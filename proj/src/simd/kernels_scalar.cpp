#include "tph/simd/kernels.hpp"

namespace tph::simd::scalar {

void horner_eval(std::span<const cplx> coeffs, std::span<const cplx> points, std::span<cplx> out) {
  const std::size_t n = points.size();
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const std::size_t deg = coeffs.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double zr = points[i].real();
    const double zi = points[i].imag();
    double ar = coeffs[deg].real();
    double ai = coeffs[deg].imag();
    for (std::size_t k = deg; k-- > 0;) {
      const double nr = ar * zr - ai * zi + coeffs[k].real();
      const double ni = ar * zi + ai * zr + coeffs[k].imag();
      ar = nr;
      ai = ni;
    }
    out[i] = cplx(ar, ai);
  }
}

void cmatvec(const cplx* m, std::size_t rows, std::size_t cols, std::size_t ld, const cplx* x,
             cplx* y) {
  for (std::size_t j = 0; j < rows; ++j) y[j] = 0.0;
  for (std::size_t k = 0; k < cols; ++k) {
    const cplx xk = x[k];
    const cplx* col = m + k * ld;
    for (std::size_t j = 0; j < rows; ++j) {
      // Written out so the reference matches the vector lanes' operation order.
      const double re = col[j].real() * xk.real() - col[j].imag() * xk.imag();
      const double im = col[j].imag() * xk.real() + col[j].real() * xk.imag();
      y[j] += cplx(re, im);
    }
  }
}

}  // namespace tph::simd::scalar
