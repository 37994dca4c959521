#include "tph/hardy.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "tph/errors.hpp"
#include "tph/roots.hpp"

namespace tph {

namespace {

using Vec = std::vector<cplx>;

// Power series of n(z)/d(z) at z = 0, d[0] != 0. Both inputs ascending from z^0.
// For the denominators used here every root of d lies outside the unit disc,
// so the recurrence is forward-stable.
Vec series(std::span<const cplx> n, std::span<const cplx> d, int count) {
  Vec out(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    cplx acc = k < n.size() ? n[k] : 0.0;
    for (std::size_t j = 1; j < d.size() && j <= k; ++j) acc -= d[j] * out[k - j];
    out[k] = acc / d[0];
  }
  return out;
}

// Taylor coefficients at 0 of a normalized symbol with num.low() >= 0.
Vec series_at_zero(const RationalSymbol& g, int count) {
  if (g.is_zero()) return Vec(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  const LaurentPoly& num = g.num();
  if (num.low() < 0) throw Error(ErrorCode::InvalidArgument, "symbol has a pole at 0");
  Vec n(static_cast<std::size_t>(num.high() + 1), 0.0);
  std::copy(num.coeffs().begin(), num.coeffs().end(), n.begin() + num.low());
  return series(n, g.den().coeffs(), count);
}

// Coefficients of t^-1, ..., t^-count for a symbol vanishing at infinity and
// analytic outside the disc. Substitutes u = 1/t and reuses the Taylor recurrence.
Vec series_at_infinity(const RationalSymbol& g, int count) {
  if (g.is_zero()) return Vec(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  const auto den = g.den().coeffs();
  const int d = static_cast<int>(den.size()) - 1;
  const LaurentPoly& num = g.num();
  if (num.high() >= d) throw Error(ErrorCode::InvalidArgument, "symbol does not vanish at infinity");
  Vec rev(den.rbegin(), den.rend());
  Vec n(static_cast<std::size_t>(d - num.low() + 1), 0.0);
  for (int k = num.low(); k <= num.high(); ++k) n[static_cast<std::size_t>(d - k)] = num.coeff(k);
  Vec s = series(n, rev, count + 1);
  return Vec(s.begin() + 1, s.end());
}

// Ascending long division m = q * d + r with deg r < deg d.
void poly_divide(const Vec& m, const Vec& d, Vec& q, Vec& r) {
  r = m;
  const std::size_t dd = d.size() - 1;
  if (m.size() <= dd) {
    q.clear();
    return;
  }
  q.assign(m.size() - dd, 0.0);
  for (std::size_t k = m.size(); k-- > dd;) {
    const cplx f = r[k] / d[dd];
    q[k - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= f * d[j];
  }
  r.resize(dd);
}

Vec dense(const LaurentPoly& p) {
  // Polynomial with low() >= 0 as an ascending vector from z^0.
  Vec v(static_cast<std::size_t>(std::max(p.high() + 1, 0)), 0.0);
  for (int k = p.low(); k <= p.high(); ++k) v[static_cast<std::size_t>(k)] = p.coeff(k);
  return v;
}

RootSplit den_roots(const RationalSymbol& f) {
  try {
    return poly_roots(f.den());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RootOnCircle) throw Error(ErrorCode::PoleOnCircle, "pole on the unit circle");
    throw;
  }
}

}  // namespace

PoleSplit pole_split(const RationalSymbol& input) {
  if (input.is_zero()) return {};
  if (input.is_laurent()) {
    const cplx scale = input.den().coeff(0);
    std::map<int, cplx> plus, minus;
    for (const auto& [k, v] : input.num().terms()) (k >= 0 ? plus : minus)[k] = v / scale;
    return {LaurentPoly::from_terms(plus), LaurentPoly::from_terms(minus)};
  }

  RationalSymbol f = input;
  RootSplit roots;
  try {
    roots = den_roots(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PoleOnCircle) throw;
    f = input.reduced();
    roots = den_roots(f);
  }

  const int k0 = std::max(0, -f.num().low());
  if (roots.inside.empty() && k0 == 0) return {f, RationalSymbol()};

  const LaurentPoly e_poly = LaurentPoly::from_roots(expand_roots(roots.inside)).shifted(k0);
  // Deflating the inside roots out of the denominator keeps the outside
  // factor exact; rebuilding it from its roots loses digits on clusters.
  std::vector<cplx> outside(f.den().coeffs().begin(), f.den().coeffs().end());
  for (const cplx z : expand_roots(roots.inside)) outside = deflate(outside, z);
  const LaurentPoly f_poly(0, outside);
  const Vec m = dense(f.num().shifted(k0));
  const Vec ev = dense(e_poly);
  const Vec fv = dense(f_poly);
  const std::size_t ne = ev.size() - 1;

  // M = A F + N E with deg A < deg E. Every division is by E, whose roots lie
  // in the disc; dividing by F top-down would amplify by its root moduli.
  auto mod_e = [&](const Vec& v) {
    Vec q, r;
    poly_divide(v, ev, q, r);
    r.resize(ne, 0.0);
    return r;
  };
  Eigen::MatrixXcd s(static_cast<Eigen::Index>(ne), static_cast<Eigen::Index>(ne));
  Vec col = mod_e(fv);
  for (std::size_t j = 0; j < ne; ++j) {
    for (std::size_t i = 0; i < ne; ++i) s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
    col.insert(col.begin(), 0.0);
    col = mod_e(col);
  }
  const Vec rm = mod_e(m);
  const Eigen::VectorXcd sol =
      s.colPivHouseholderQr().solve(Eigen::Map<const Eigen::VectorXcd>(rm.data(), static_cast<Eigen::Index>(ne)));

  const LaurentPoly a(0, Vec(sol.data(), sol.data() + ne));
  const Vec rest = dense(LaurentPoly(0, m) - a * f_poly);
  Vec n, unused;
  poly_divide(rest, ev, n, unused);
  return {RationalSymbol(LaurentPoly(0, n), f_poly), RationalSymbol(a, e_poly)};
}

HardyFunction::HardyFunction(RationalSymbol f) : f_(std::move(f)) {
  if (f_.is_zero()) return;
  auto valid = [](const RationalSymbol& g) {
    if (g.num().low() < 0) return false;
    if (g.is_laurent()) return true;
    for (const Root& r : polynomial_roots(g.den().coeffs()))
      if (std::abs(r.value) <= 1.0 + 1e-8) return false;
    return true;
  };
  if (valid(f_)) return;
  f_ = f_.reduced();
  if (!valid(f_)) throw Error(ErrorCode::InvalidArgument, "function has poles in the closed disc");
}

HardyFunction HardyFunction::trusted(RationalSymbol f) {
  HardyFunction h;
  h.f_ = std::move(f);
  return h;
}

HardyFunction apply_toeplitz(const RationalSymbol& g, const HardyFunction& f) {
  return HardyFunction::trusted(pole_split((g * f.value()).reduced()).plus);
}

HardyFunction apply_hankel(const RationalSymbol& g, const HardyFunction& f) {
  return HardyFunction::trusted(pole_split((g * f.value().flip()).reduced()).plus);
}

HardyFunction apply_jqgp(const RationalSymbol& g, const HardyFunction& f) {
  return HardyFunction::trusted(pole_split((g * f.value()).reduced()).minus.flip());
}

std::vector<cplx> fourier_coeffs(const RationalSymbol& x, int k_min, int k_max) {
  if (k_max < k_min) return {};
  const PoleSplit split = pole_split(x);
  std::vector<cplx> out(static_cast<std::size_t>(k_max - k_min + 1), 0.0);
  if (k_max >= 0) {
    const Vec p = series_at_zero(split.plus, k_max + 1);
    for (int k = std::max(k_min, 0); k <= k_max; ++k)
      out[static_cast<std::size_t>(k - k_min)] = p[static_cast<std::size_t>(k)];
  }
  if (k_min < 0) {
    const Vec m = series_at_infinity(split.minus, -k_min);
    for (int k = k_min; k <= std::min(k_max, -1); ++k)
      out[static_cast<std::size_t>(k - k_min)] = m[static_cast<std::size_t>(-k - 1)];
  }
  return out;
}

std::vector<cplx> taylor_coeffs(const HardyFunction& f, int count) {
  return series_at_zero(f.value(), count);
}

double hardy_norm(const HardyFunction& f) { return circle_rms(f.value()); }

}  // namespace tph
