#include "tph/matching.hpp"

#include <algorithm>

#include "tph/errors.hpp"
#include "tph/wiener_hopf.hpp"

namespace tph {

const char* to_string(Quadrant q) noexcept {
  switch (q) {
    case Quadrant::PP: return "PP";
    case Quadrant::NN: return "NN";
    case Quadrant::PN: return "PN";
    case Quadrant::NP: return "NP";
  }
  return "?";
}

Quadrant classify_quadrant(int k1, int k2) noexcept {
  if (k1 >= 0 && k2 >= 0) return Quadrant::PP;
  if (k1 <= 0 && k2 <= 0) return Quadrant::NN;
  if (k1 >= 0) return Quadrant::PN;
  return Quadrant::NP;
}

bool check_matching(const RationalSymbol& a, const RationalSymbol& b) {
  if (a.is_zero()) throw Error(ErrorCode::SymbolDegenerateOnCircle, "a vanishes identically");
  if (b.is_zero()) throw Error(ErrorCode::SymbolDegenerateOnCircle, "b vanishes identically");
  // Both symbols must be invertible on the circle; factorization detects
  // zeros and poles there.
  winding_index(a);
  winding_index(b);
  const auto pts = circle_points(256);
  const auto av = a.eval_many(pts), atv = a.tilde().eval_many(pts);
  const auto bv = b.eval_many(pts), btv = b.tilde().eval_many(pts);
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    scale = std::max(scale, std::abs(av[i] * atv[i]));
    diff = std::max(diff, std::abs(av[i] * atv[i] - bv[i] * btv[i]));
  }
  return diff <= 1e-9 * scale;
}

SymbolPair subordinated_pair(const RationalSymbol& a, const RationalSymbol& b) {
  return {(a / b).reduced(), (b / a.tilde()).reduced()};
}

MatchingAnalysis analyze(const RationalSymbol& a, const RationalSymbol& b) {
  if (!check_matching(a, b)) throw Error(ErrorCode::NotMatchingPair, "not a matching pair");
  MatchingAnalysis m;
  m.a = a;
  m.b = b;
  std::tie(m.c, m.d) = subordinated_pair(a, b);
  m.kappa1 = -winding_index(m.c);
  m.fredholm_c = true;
  m.kappa2 = -winding_index(m.d);
  m.fredholm_d = true;
  m.quadrant = classify_quadrant(m.kappa1, m.kappa2);
  return m;
}

SymbolPair adjoint_pair(const RationalSymbol& a, const RationalSymbol& b) {
  if (!check_matching(a, b)) throw Error(ErrorCode::NotMatchingPair, "not a matching pair");
  return {a.conj_reflect(), b.conj_coeffs()};
}

SymbolPair shift_pair(const RationalSymbol& a, const RationalSymbol& b, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "shift must be non-negative");
  if (!check_matching(a, b)) throw Error(ErrorCode::NotMatchingPair, "not a matching pair");
  return {a.shifted(-n), b.shifted(n)};
}

}  // namespace tph
