#include "tph/wiener_hopf.hpp"

#include <cmath>
#include <numbers>

#include "tph/errors.hpp"
#include "tph/roots.hpp"

namespace tph {

namespace {

struct SymbolRoots {
  RootSplit zeros;
  RootSplit poles;
};

SymbolRoots split_roots(const RationalSymbol& g) {
  try {
    return {poly_roots(g.num()), poly_roots(g.den())};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RootOnCircle)
      throw Error(ErrorCode::SymbolDegenerateOnCircle, "zero or pole on the unit circle");
    throw;
  }
}

int inside_count(const RootSplit& s) {
  int n = 0;
  for (const Root& r : s.inside) n += r.multiplicity;
  return n;
}

// prod (1 - z/t) over the inside roots.
LaurentPoly minus_factor(const RootSplit& s) {
  const auto roots = expand_roots(s.inside);
  return LaurentPoly::from_roots(roots).shifted(-static_cast<int>(roots.size()));
}

LaurentPoly plus_factor(const RootSplit& s, cplx lead) {
  return LaurentPoly::from_roots(expand_roots(s.outside)) * lead;
}

WHFactorization factorize_unchecked(const RationalSymbol& g) {
  if (g.is_zero()) throw Error(ErrorCode::SymbolDegenerateOnCircle, "zero symbol");
  SymbolRoots r;
  RationalSymbol h = g;
  try {
    r = split_roots(h);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SymbolDegenerateOnCircle) throw;
    h = g.reduced();
    r = split_roots(h);
  }
  WHFactorization f;
  f.index_n = r.zeros.zero_order - r.poles.zero_order + inside_count(r.zeros) - inside_count(r.poles);
  f.g_minus = RationalSymbol(minus_factor(r.zeros), minus_factor(r.poles));
  f.g_plus = RationalSymbol(plus_factor(r.zeros, h.num().coeffs().back()),
                            plus_factor(r.poles, h.den().coeffs().back()));

  const auto pts = circle_points(128);
  const auto gv = g.eval_many(pts);
  const auto mv = f.g_minus.eval_many(pts);
  const auto pv = f.g_plus.eval_many(pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const cplx rebuilt = mv[i] * std::pow(pts[i], f.index_n) * pv[i];
    if (std::abs(rebuilt - gv[i]) > 1e-9 * std::max(1.0, std::abs(gv[i])))
      throw Error(ErrorCode::NonConvergence, "factorization does not reproduce the symbol");
  }
  return f;
}

std::optional<int> guarded_signature(const WHFactorization& f, std::string* why) {
  const cplx g0 = f.g_plus.eval(0.0);
  const int sigma = g0.real() >= 0.0 ? 1 : -1;
  if (std::abs(g0 - cplx(sigma)) > 1e-7) {
    if (why) *why = "g_plus(0) is not +-1";
    return std::nullopt;
  }
  // g_plus * tilde(g_minus) is the constant sigma.
  const RationalSymbol prod = f.g_plus * f.g_minus.tilde();
  for (const cplx v : prod.eval_many(circle_points(128))) {
    if (std::abs(v - cplx(sigma)) > 1e-8) {
      if (why) *why = "g_plus * tilde(g_minus) deviates from the signature";
      return std::nullopt;
    }
  }
  return sigma;
}

}  // namespace

int argument_principle_winding(const RationalSymbol& g, int samples) {
  const auto v = g.eval_many(circle_points(samples));
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) total += std::arg(v[(i + 1) % v.size()] / v[i]);
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

int winding_index(const RationalSymbol& g) {
  const int n = factorize_unchecked(g).index_n;
  // The inscribed polygon misses roots within ~(pi/samples)^2/2 of the circle,
  // so refine before declaring a disagreement.
  for (int samples = 1024; samples <= (1 << 18); samples *= 4)
    if (argument_principle_winding(g, samples) == n) return n;
  throw Error(ErrorCode::NonConvergence, "root count and argument principle disagree");
}

WHFactorization factorize(const RationalSymbol& g) {
  WHFactorization f = factorize_unchecked(g);
  if (is_matching_function(g)) f.signature = guarded_signature(f, nullptr);
  return f;
}

bool is_matching_function(const RationalSymbol& g, int samples, double tol) {
  if (g.is_zero()) return false;
  const auto pts = circle_points(samples);
  const auto v = g.eval_many(pts);
  const auto w = g.tilde().eval_many(pts);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(std::abs(v[i] * w[i] - 1.0) <= tol)) return false;
  return true;
}

int signature(const WHFactorization& f) {
  std::string why;
  const auto s = guarded_signature(f, &why);
  if (!s) throw Error(ErrorCode::SignatureGuardFailed, why);
  return *s;
}

int signature(const RationalSymbol& g) {
  if (!is_matching_function(g)) throw Error(ErrorCode::NotMatchingFunction, "g(t) g(1/t) != 1");
  return signature(factorize_unchecked(g));
}

int signature_point_check(const RationalSymbol& g) {
  if (!is_matching_function(g)) throw Error(ErrorCode::NotMatchingFunction, "g(t) g(1/t) != 1");
  if (winding_index(g) != 0) throw Error(ErrorCode::IndexNotZero, "winding number is not zero");
  return g.eval(1.0).real() >= 0.0 ? 1 : -1;
}

}  // namespace tph
