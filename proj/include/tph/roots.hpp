#pragma once

#include <span>
#include <vector>

#include "tph/laurent_poly.hpp"

namespace tph {

struct Root {
  cplx value;
  int multiplicity = 1;
};

/// Roots of a Laurent polynomial split by the unit circle. The monomial factor
/// t^zero_order is kept apart, so inside/outside never contain 0.
struct RootSplit {
  std::vector<Root> inside;
  std::vector<Root> outside;
  int zero_order = 0;
};

struct RootTolerances {
  double circle = 1e-8;    // relative distance to |z| = 1 that is treated as "on the circle"
  double residual = 1e-10; // backward-error bound after polishing
  double cluster = 1e-7;   // roots closer than this merge into one multiple root
};

/// All roots of the ordinary polynomial sum_k c[k] z^k with c[0] != 0, merged
/// into clusters. No classification against the circle.
std::vector<Root> polynomial_roots(std::span<const cplx> ascending,
                                   const RootTolerances& tol = {});

/// Throws RootOnCircle when a root sits within tol.circle of |z| = 1 and
/// NonConvergence when the eigenvalue solver or the residual check fails.
RootSplit poly_roots(const LaurentPoly& p, const RootTolerances& tol = {});

/// Expands each root according to its multiplicity.
std::vector<cplx> expand_roots(std::span<const Root> roots);

/// Quotient of sum_k c[k] t^k by (t - z), dropping the remainder. Runs from
/// the top for |z| <= 1 and from the bottom otherwise, so it stays stable.
std::vector<cplx> deflate(std::span<const cplx> ascending, cplx z);

}  // namespace tph
