#include "tph/rational_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tph/errors.hpp"
#include "tph/roots.hpp"

namespace tph {

namespace {

// End coefficients below this fraction of the largest one are rounding debris
// from cancellation; keeping them would plant spurious roots near 0 or infinity.
constexpr double kChopRel = 1e-14;


// Normalized denominators that agree to rounding describe the same poles;
// cross-multiplying them would double the degree around near-cancelling pairs.
bool same_denominator(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.low() != y.low() || x.high() != y.high()) return false;
  for (int k = x.low(); k <= x.high(); ++k)
    if (std::abs(x.coeff(k) - y.coeff(k)) > 1e-13) return false;
  return true;
}

}  // namespace

RationalSymbol::RationalSymbol(LaurentPoly num, LaurentPoly den) {
  den = den.chopped(kChopRel);
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational symbol with zero denominator");
  num = num.chopped(kChopRel);
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1.0);
    return;
  }
  const int shift = den.low();
  num = num.shifted(-shift);
  den = den.shifted(-shift);
  const cplx d0 = den.coeff(0);
  const cplx scale = std::conj(d0) / (std::abs(d0) * den.max_abs());
  // Re-normalizing an already normal denominator must leave it bit-identical,
  // otherwise the equal-denominator fast paths stop matching.
  if (std::abs(scale - 1.0) < 1e-15) {
    num_ = std::move(num);
    den_ = std::move(den);
    return;
  }
  num_ = num * scale;
  den_ = den * scale;
}

cplx RationalSymbol::eval(cplx t) const {
  const cplx d = den_.eval(t);
  double scale = 0.0;
  const double at = std::abs(t);
  for (std::size_t k = den_.coeffs().size(); k-- > 0;) scale = scale * at + std::abs(den_.coeffs()[k]);
  if (std::abs(d) <= 1e-6 * scale && den_.span_degree() > 0) {
    for (const Root& r : polynomial_roots(den_.coeffs()))
      if (std::abs(t - r.value) < 1e-8 * std::max(1.0, std::abs(r.value)))
        throw Error(ErrorCode::PoleAtEvaluationPoint, "evaluation point at a pole");
  }
  if (num_.low() < 0 && t == 0.0)
    throw Error(ErrorCode::PoleAtEvaluationPoint, "evaluation at t = 0 with a pole there");
  return num_.eval(t) / d;
}

std::vector<cplx> RationalSymbol::eval_many(std::span<const cplx> points) const {
  std::vector<cplx> n(points.size()), d(points.size());
  num_.eval_many(points, n);
  den_.eval_many(points, d);
  for (std::size_t i = 0; i < n.size(); ++i) n[i] /= d[i];
  return n;
}

RationalSymbol RationalSymbol::tilde() const { return {num_.tilde(), den_.tilde()}; }

RationalSymbol RationalSymbol::conj_reflect() const {
  return {num_.conj_coeffs().tilde(), den_.conj_coeffs().tilde()};
}

RationalSymbol RationalSymbol::conj_coeffs() const { return {num_.conj_coeffs(), den_.conj_coeffs()}; }

RationalSymbol RationalSymbol::flip() const { return tilde().shifted(-1); }

RationalSymbol RationalSymbol::shifted(int k) const {
  return RationalSymbol(num_.shifted(k), den_, Normalized{});
}

RationalSymbol RationalSymbol::reciprocal() const {
  if (num_.is_zero()) throw Error(ErrorCode::InvalidArgument, "reciprocal of the zero symbol");
  return {den_, num_};
}

RationalSymbol RationalSymbol::reduced(double tol) const {
  if (num_.span_degree() < 1 || den_.span_degree() < 1) return *this;
  std::vector<Root> zeros, poles;
  try {
    RootTolerances rt;
    rt.residual = 1e-8;
    zeros = polynomial_roots(num_.coeffs(), rt);
    poles = polynomial_roots(den_.coeffs(), rt);
  } catch (const Error&) {
    return *this;
  }
  // Matched pairs are divided out of num and den directly; rebuilding from
  // roots would lose digits on clustered roots.
  std::vector<cplx> num(num_.coeffs().begin(), num_.coeffs().end());
  std::vector<cplx> den(den_.coeffs().begin(), den_.coeffs().end());
  bool cancelled = false;
  for (Root& p : poles) {
    for (Root& z : zeros) {
      if (z.multiplicity == 0 || p.multiplicity == 0) continue;
      if (std::abs(z.value - p.value) < tol * std::max(1.0, std::abs(p.value))) {
        const int m = std::min(z.multiplicity, p.multiplicity);
        z.multiplicity -= m;
        p.multiplicity -= m;
        for (int k = 0; k < m; ++k) {
          num = deflate(num, z.value);
          den = deflate(den, p.value);
        }
        cancelled = true;
      }
    }
  }
  if (!cancelled) return *this;
  return {LaurentPoly(num_.low(), num), LaurentPoly(0, den)};
}

RationalSymbol RationalSymbol::operator-() const { return RationalSymbol(-num_, den_, Normalized{}); }

RationalSymbol operator+(const RationalSymbol& x, const RationalSymbol& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (same_denominator(x.den_, y.den_)) return {x.num_ + y.num_, x.den_};
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

RationalSymbol operator-(const RationalSymbol& x, const RationalSymbol& y) { return x + (-y); }

RationalSymbol operator*(const RationalSymbol& x, const RationalSymbol& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return {x.num_ * y.num_, x.den_ * y.den_};
}

RationalSymbol operator/(const RationalSymbol& x, const RationalSymbol& y) { return x * y.reciprocal(); }

RationalSymbol operator*(const RationalSymbol& x, cplx s) {
  if (s == 0.0) return {};
  return RationalSymbol(x.num_ * s, x.den_, RationalSymbol::Normalized{});
}

cplx rs_eval(const RationalSymbol& x, cplx t0) { return x.eval(t0); }

std::vector<cplx> circle_points(int n) {
  std::vector<cplx> pts(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pts[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
  return pts;
}

double circle_sup(const RationalSymbol& x, int n) {
  double m = 0.0;
  for (const cplx v : x.eval_many(circle_points(n))) m = std::max(m, std::abs(v));
  return m;
}

double circle_distance(const RationalSymbol& x, const RationalSymbol& y, int n) {
  const auto pts = circle_points(n);
  const auto vx = x.eval_many(pts);
  const auto vy = y.eval_many(pts);
  double m = 0.0;
  for (std::size_t i = 0; i < vx.size(); ++i) m = std::max(m, std::abs(vx[i] - vy[i]));
  return m;
}

double circle_rms(const RationalSymbol& x, int n) {
  double s = 0.0;
  for (const cplx v : x.eval_many(circle_points(n))) s += std::norm(v);
  return std::sqrt(s / n);
}

}  // namespace tph
