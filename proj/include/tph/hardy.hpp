#pragma once

#include <vector>

#include "tph/rational_symbol.hpp"

namespace tph {

/// f = plus + minus with plus = Pf (exponents >= 0) and minus = Qf (exponents <= -1).
struct PoleSplit {
  RationalSymbol plus;
  RationalSymbol minus;
};

/// Partial-fraction split by the unit circle. Throws PoleOnCircle.
PoleSplit pole_split(const RationalSymbol& f);

/// Rational function analytic on the closed disc.
class HardyFunction {
 public:
  HardyFunction() = default;
  /// Validates that every pole lies outside the closed disc; throws InvalidArgument.
  explicit HardyFunction(RationalSymbol f);
  /// Skips validation; for values produced by P(...) or built from g+ factors.
  static HardyFunction trusted(RationalSymbol f);

  const RationalSymbol& value() const noexcept { return f_; }
  bool is_zero() const noexcept { return f_.is_zero(); }

  friend HardyFunction operator+(const HardyFunction& x, const HardyFunction& y) {
    return trusted(x.f_ + y.f_);
  }
  friend HardyFunction operator-(const HardyFunction& x, const HardyFunction& y) {
    return trusted(x.f_ - y.f_);
  }
  friend HardyFunction operator*(cplx s, const HardyFunction& x) { return trusted(x.f_ * s); }

 private:
  RationalSymbol f_;
};

/// P(g f).
HardyFunction apply_toeplitz(const RationalSymbol& g, const HardyFunction& f);
/// P(g J f).
HardyFunction apply_hankel(const RationalSymbol& g, const HardyFunction& f);
/// J Q(g f).
HardyFunction apply_jqgp(const RationalSymbol& g, const HardyFunction& f);

/// Fourier coefficients x_k for k_min <= k <= k_max. Throws PoleOnCircle.
std::vector<cplx> fourier_coeffs(const RationalSymbol& x, int k_min, int k_max);

/// First count Taylor coefficients at 0 of a function analytic in the disc.
std::vector<cplx> taylor_coeffs(const HardyFunction& f, int count);

/// Discrete H^2 norm over 256 circle samples.
double hardy_norm(const HardyFunction& f);

}  // namespace tph
