#pragma once

#include <optional>

#include "tph/rational_symbol.hpp"

namespace tph {

/// g = g_minus * t^index_n * g_plus with g_minus(inf) = 1.
struct WHFactorization {
  RationalSymbol g_minus;
  int index_n = 0;
  RationalSymbol g_plus;
  std::optional<int> signature;  // set when g is a matching function
};

/// Zeros inside minus poles inside, counting the order at 0. ind T(g) = -n.
/// Cross-checked against the argument principle. Throws SymbolDegenerateOnCircle.
int winding_index(const RationalSymbol& g);

/// Discrete winding number of g around 0 over `samples` circle points.
int argument_principle_winding(const RationalSymbol& g, int samples);

WHFactorization factorize(const RationalSymbol& g);

/// sup over `samples` circle points of |g(t) g(1/t) - 1| <= tol.
bool is_matching_function(const RationalSymbol& g, int samples = 256, double tol = 1e-9);

/// g_plus(0) rounded to +-1. Throws NotMatchingFunction or SignatureGuardFailed.
int signature(const RationalSymbol& g);
int signature(const WHFactorization& f);

/// round(g(1)); independent prediction of the signature when winding is 0.
/// Throws IndexNotZero otherwise.
int signature_point_check(const RationalSymbol& g);

}  // namespace tph
