#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace tph {

using cplx = std::complex<double>;

/// Finitely supported Fourier series sum_k c_k t^k on the unit circle.
///
/// Storage is dense: the lowest exponent plus a contiguous coefficient block.
/// Both ends of the block are nonzero; the zero polynomial has an empty block.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(cplx constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(double constant) : LaurentPoly(cplx(constant)) {}  // NOLINT
  LaurentPoly(int low, std::vector<cplx> coeffs);

  static LaurentPoly monomial(int k, cplx c = 1.0);
  static LaurentPoly from_terms(const std::map<int, cplx>& terms);
  /// Monic polynomial with the given roots (each listed once per multiplicity).
  static LaurentPoly from_roots(std::span<const cplx> roots);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monomial() const noexcept { return c_.size() == 1; }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(c_.size()) - 1; }
  /// high() - low(); -1 for the zero polynomial.
  int span_degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  cplx coeff(int k) const noexcept;
  std::span<const cplx> coeffs() const noexcept { return c_; }
  std::map<int, cplx> terms() const;

  cplx eval(cplx t) const;
  /// Vectorised evaluation; out.size() must equal points.size().
  void eval_many(std::span<const cplx> points, std::span<cplx> out) const;

  double max_abs() const noexcept;
  double norm1() const noexcept;

  /// k -> -k.
  LaurentPoly tilde() const;
  /// Conjugated coefficients, exponents unchanged.
  LaurentPoly conj_coeffs() const;
  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  /// Drops end coefficients with |c| <= rel * max_abs().
  LaurentPoly chopped(double rel) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(cplx s);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(LaurentPoly x, const LaurentPoly& y) { return x *= y; }
  friend LaurentPoly operator*(LaurentPoly x, cplx s) { return x *= s; }
  friend LaurentPoly operator*(cplx s, LaurentPoly x) { return x *= s; }
  friend LaurentPoly operator*(LaurentPoly x, double s) { return x *= cplx(s); }
  friend LaurentPoly operator*(double s, LaurentPoly x) { return x *= cplx(s); }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    return x.low_ == y.low_ && x.c_ == y.c_;
  }

 private:
  void trim();

  int low_ = 0;
  std::vector<cplx> c_;
};

enum class ArithOp { add, sub, mul };

LaurentPoly lp_arith(const LaurentPoly& x, const LaurentPoly& y, ArithOp op);

/// Maximum of |x(t) - y(t)| over n equispaced points of the unit circle.
double max_circle_distance(const LaurentPoly& x, const LaurentPoly& y, int n = 16);

}  // namespace tph
