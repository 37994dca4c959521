#pragma once

#include <random>
#include <utility>
#include <vector>

#include "tph/hardy.hpp"
#include "tph/rational_symbol.hpp"

namespace tph::testing {

using Rng = std::mt19937_64;

inline cplx random_complex(Rng& rng, double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> mod(lo, hi), ang(0.0, 6.283185307179586);
  return std::polar(mod(rng), ang(rng));
}

/// A root clear of the circle: |z| <= 0.6 inside or |z| >= 1.67 outside.
inline cplx random_root(Rng& rng, bool inside) {
  return inside ? random_complex(rng, 0.05, 0.6) : random_complex(rng, 1.67, 4.0);
}

/// lead * t^shift * prod (t - z_i) with `inside` roots in the disc and `outside` beyond it.
inline LaurentPoly poly_with_roots(Rng& rng, int inside, int outside, int shift = 0) {
  std::vector<cplx> roots;
  for (int i = 0; i < inside; ++i) roots.push_back(random_root(rng, true));
  for (int i = 0; i < outside; ++i) roots.push_back(random_root(rng, false));
  return (LaurentPoly::from_roots(roots) * random_complex(rng)).shifted(shift);
}

/// Circle-clear Laurent polynomial with span degree at most max_deg.
inline LaurentPoly random_laurent(Rng& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), shift(-2, 2), coin(0, 1);
  const int d = deg(rng);
  int inside = 0;
  for (int i = 0; i < d; ++i) inside += coin(rng);
  return poly_with_roots(rng, inside, d - inside, shift(rng));
}

inline RationalSymbol random_rational(Rng& rng, int max_deg = 3) {
  return {random_laurent(rng, max_deg), random_laurent(rng, max_deg).shifted(0)};
}

/// Analytic on the closed disc: polynomial numerator over outside poles.
inline HardyFunction random_hardy(Rng& rng, int max_deg = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg), poles(0, 2);
  std::vector<cplx> num(static_cast<std::size_t>(deg(rng) + 1));
  for (cplx& c : num) c = random_complex(rng);
  return HardyFunction(RationalSymbol(LaurentPoly(0, num), poly_with_roots(rng, 0, poles(rng))));
}

/// Matching function eps * t^k * h / h~ for random circle-clear h. Its winding
/// is k + 2 wind(h) and its signature is eps.
inline RationalSymbol random_matching(Rng& rng, int max_deg = 4, int k = 0, double eps = 1.0) {
  const LaurentPoly h = random_laurent(rng, max_deg);
  return RationalSymbol(h.shifted(k), h.tilde()) * eps;
}

/// Matching pair (a, a g) with g = eps t^k h / h~, k drawn from [k_lo, k_hi].
inline std::pair<RationalSymbol, RationalSymbol> random_pair(Rng& rng, int k_lo = -2, int k_hi = 2,
                                                             int max_deg = 2) {
  std::uniform_int_distribution<int> kd(k_lo, k_hi), ed(0, 1);
  const RationalSymbol a = random_rational(rng, max_deg);
  const int k = kd(rng);
  const double eps = ed(rng) ? 1.0 : -1.0;
  return {a, a * random_matching(rng, max_deg, k, eps)};
}

inline double max_abs_diff(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return x.size() == y.size() ? m : 1e300;
}

}  // namespace tph::testing
