#pragma once

#include <span>
#include <vector>

#include "tph/laurent_poly.hpp"

namespace tph {

/// Quotient num/den of two Laurent polynomials.
///
/// Normal form: den has lowest exponent 0 with a real positive constant term
/// and unit max-coefficient; every power of t lives in num. Exactly cancelling
/// monomial factors are removed on construction, root-level cancellation only
/// by reduced().
class RationalSymbol {
 public:
  RationalSymbol() : den_(1.0) {}
  RationalSymbol(cplx c) : num_(c), den_(1.0) {}  // NOLINT(google-explicit-constructor)
  RationalSymbol(double c) : num_(c), den_(1.0) {}  // NOLINT
  RationalSymbol(LaurentPoly p) : num_(std::move(p)), den_(1.0) {}  // NOLINT
  RationalSymbol(LaurentPoly num, LaurentPoly den);

  static RationalSymbol monomial(int k, cplx c = 1.0) { return LaurentPoly::monomial(k, c); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when den is constant, i.e. the symbol is a Laurent polynomial.
  bool is_laurent() const noexcept { return den_.span_degree() == 0; }

  /// Throws PoleAtEvaluationPoint near a root of den.
  cplx eval(cplx t) const;
  /// Unchecked vectorised evaluation.
  std::vector<cplx> eval_many(std::span<const cplx> points) const;

  /// t -> 1/t.
  RationalSymbol tilde() const;
  /// Conjugate on the circle: coefficients conjugated, exponents negated.
  RationalSymbol conj_reflect() const;
  /// Coefficients conjugated, exponents kept.
  RationalSymbol conj_coeffs() const;
  /// (Jf)(t) = t^-1 f(1/t).
  RationalSymbol flip() const;
  RationalSymbol shifted(int k) const;
  RationalSymbol reciprocal() const;
  /// Cancels numerator/denominator root pairs closer than tol.
  RationalSymbol reduced(double tol = 1e-7) const;

  RationalSymbol operator-() const;
  friend RationalSymbol operator+(const RationalSymbol& x, const RationalSymbol& y);
  friend RationalSymbol operator-(const RationalSymbol& x, const RationalSymbol& y);
  friend RationalSymbol operator*(const RationalSymbol& x, const RationalSymbol& y);
  friend RationalSymbol operator/(const RationalSymbol& x, const RationalSymbol& y);
  friend RationalSymbol operator*(const RationalSymbol& x, cplx s);
  friend RationalSymbol operator*(cplx s, const RationalSymbol& x) { return x * s; }
  friend RationalSymbol operator*(const RationalSymbol& x, double s) { return x * cplx(s); }
  friend RationalSymbol operator*(double s, const RationalSymbol& x) { return x * cplx(s); }
  friend bool operator==(const RationalSymbol& x, const RationalSymbol& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  struct Normalized {};
  RationalSymbol(LaurentPoly num, LaurentPoly den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

cplx rs_eval(const RationalSymbol& x, cplx t0);

/// n equispaced points exp(2 pi i k / n) on the unit circle.
std::vector<cplx> circle_points(int n);
/// sup over n circle samples of |x(t)|.
double circle_sup(const RationalSymbol& x, int n = 256);
/// sup over n circle samples of |x(t) - y(t)|.
double circle_distance(const RationalSymbol& x, const RationalSymbol& y, int n = 256);
/// Root-mean-square of x over n circle samples (discrete L2 norm).
double circle_rms(const RationalSymbol& x, int n = 256);

}  // namespace tph
