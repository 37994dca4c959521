#pragma once

#include <utility>

#include "tph/rational_symbol.hpp"

namespace tph {

/// Sign cases of (kappa1, kappa2); P includes 0, N is strictly negative.
enum class Quadrant { PP, NN, PN, NP };

const char* to_string(Quadrant q) noexcept;

using SymbolPair = std::pair<RationalSymbol, RationalSymbol>;

struct MatchingAnalysis {
  RationalSymbol a, b;
  RationalSymbol c, d;  // c = a / b, d = b / a~
  int kappa1 = 0;       // ind T(c)
  int kappa2 = 0;       // ind T(d)
  bool fredholm_c = false;
  bool fredholm_d = false;
  Quadrant quadrant = Quadrant::PP;
};

/// a(t) a(1/t) = b(t) b(1/t) on 256 circle samples, relative to max |a a~|.
/// Throws SymbolDegenerateOnCircle when a or b vanishes or blows up on the circle.
bool check_matching(const RationalSymbol& a, const RationalSymbol& b);

/// Throws NotMatchingPair or SymbolDegenerateOnCircle.
MatchingAnalysis analyze(const RationalSymbol& a, const RationalSymbol& b);

/// (c, d) without any checks.
SymbolPair subordinated_pair(const RationalSymbol& a, const RationalSymbol& b);

/// Symbols of the adjoint operator: (conj a, tilde(conj b)).
SymbolPair adjoint_pair(const RationalSymbol& a, const RationalSymbol& b);

/// (a t^-n, b t^n).
SymbolPair shift_pair(const RationalSymbol& a, const RationalSymbol& b, int n);

Quadrant classify_quadrant(int kappa1, int kappa2) noexcept;

}  // namespace tph
