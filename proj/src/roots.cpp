#include "tph/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "tph/errors.hpp"

namespace tph {

namespace {

struct Eval {
  cplx p;
  cplx dp;
  double scale;  // sum |c_k| |z|^k, the backward-error denominator
};

Eval horner_with_derivative(std::span<const cplx> c, cplx z) {
  cplx p = c.back();
  cplx dp = 0.0;
  double scale = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    scale = scale * az + std::abs(c[k]);
  }
  return {p, dp, scale};
}

double backward_error(std::span<const cplx> c, cplx z) {
  const Eval e = horner_with_derivative(c, z);
  return e.scale > 0.0 ? std::abs(e.p) / e.scale : std::abs(e.p);
}

}  // namespace

std::vector<Root> polynomial_roots(std::span<const cplx> c, const RootTolerances& tol) {
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};

  std::vector<cplx> raw;
  if (deg == 1) {
    raw.push_back(-c[0] / c[1]);
  } else {
    // Companion matrix of the monic polynomial.
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                   static_cast<Eigen::Index>(deg));
    const cplx lead = c[deg];
    for (std::size_t i = 1; i < deg; ++i)
      comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < deg; ++i)
      comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -c[i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success)
      throw Error(ErrorCode::NonConvergence, "companion eigenvalue iteration failed");
    const auto& ev = solver.eigenvalues();
    raw.assign(ev.data(), ev.data() + ev.size());
  }

  // One guarded Newton step per root.
  for (cplx& z : raw) {
    const Eval e = horner_with_derivative(c, z);
    if (e.dp == 0.0) continue;
    const cplx polished = z - e.p / e.dp;
    if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
        backward_error(c, polished) <= backward_error(c, z))
      z = polished;
  }

  // Greedy clustering; a cluster's value is the mean of its members.
  std::vector<Root> out;
  std::vector<cplx> sums;
  for (const cplx z : raw) {
    bool merged = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (std::abs(z - out[i].value) < tol.cluster * std::max(1.0, std::abs(out[i].value))) {
        sums[i] += z;
        ++out[i].multiplicity;
        out[i].value = sums[i] / static_cast<double>(out[i].multiplicity);
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.push_back({z, 1});
      sums.push_back(z);
    }
  }

  // An m-fold root comes back from the eigensolver as a ring of radius
  // ~eps^(1/m), far wider than the cluster radius, while the ring's mean is
  // accurate. Merge wider pairs only when the mean annihilates the matching
  // derivatives, which genuinely distinct roots do not.
  std::vector<std::vector<cplx>> derivs{std::vector<cplx>(c.begin(), c.end())};
  auto derivative = [&](std::size_t k) -> const std::vector<cplx>& {
    while (derivs.size() <= k) {
      const auto& prev = derivs.back();
      std::vector<cplx> d;
      for (std::size_t j = 1; j < prev.size(); ++j) d.push_back(prev[j] * static_cast<double>(j));
      derivs.push_back(std::move(d));
    }
    return derivs[k];
  };
  auto is_multiple = [&](cplx m, int mult) {
    for (int k = 0; k < mult; ++k) {
      const auto& d = derivative(static_cast<std::size_t>(k));
      if (d.size() < 2 || backward_error(d, m) > 1e-11) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < out.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < out.size() && !changed; ++j) {
        const double scale = std::max(1.0, std::abs(out[i].value));
        if (std::abs(out[i].value - out[j].value) > 1e-4 * scale) continue;
        const int mult = out[i].multiplicity + out[j].multiplicity;
        const cplx mean = (sums[i] + sums[j]) / static_cast<double>(mult);
        // Replacing two roots delta apart by their mean moves the polynomial
        // by O(delta^2), below rounding once delta^2 < 1e-13.
        const double delta = std::abs(out[i].value - out[j].value) / scale;
        if (delta * delta > 1e-13 && !is_multiple(mean, mult)) continue;
        out[i] = {mean, mult};
        sums[i] += sums[j];
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
        sums.erase(sums.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }

  // Newton on the (m-1)-th derivative sharpens an m-fold cluster.
  for (Root& r : out) {
    if (r.multiplicity < 2) continue;
    const auto& d = derivative(static_cast<std::size_t>(r.multiplicity - 1));
    for (int it = 0; it < 3; ++it) {
      const Eval e = horner_with_derivative(d, r.value);
      if (e.dp == 0.0) break;
      const cplx polished = r.value - e.p / e.dp;
      if (!std::isfinite(polished.real()) || !std::isfinite(polished.imag()) ||
          backward_error(d, polished) > backward_error(d, r.value))
        break;
      r.value = polished;
    }
  }

  for (const Root& r : out) {
    if (backward_error(c, r.value) > tol.residual)
      throw Error(ErrorCode::NonConvergence, "root residual above tolerance after polishing");
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    if (std::abs(x.value) != std::abs(y.value)) return std::abs(x.value) < std::abs(y.value);
    return std::arg(x.value) < std::arg(y.value);
  });
  return out;
}

RootSplit poly_roots(const LaurentPoly& p, const RootTolerances& tol) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  RootSplit split;
  split.zero_order = p.low();
  for (const Root& r : polynomial_roots(p.coeffs(), tol)) {
    const double gap = std::abs(std::abs(r.value) - 1.0);
    if (gap < tol.circle)
      throw Error(ErrorCode::RootOnCircle, "polynomial root within circle tolerance of |z| = 1");
    (std::abs(r.value) < 1.0 ? split.inside : split.outside).push_back(r);
  }
  return split;
}

std::vector<cplx> expand_roots(std::span<const Root> roots) {
  std::vector<cplx> out;
  for (const Root& r : roots)
    for (int m = 0; m < r.multiplicity; ++m) out.push_back(r.value);
  return out;
}

std::vector<cplx> deflate(std::span<const cplx> c, cplx z) {
  const std::size_t n = c.size();
  if (n < 2) return {};
  std::vector<cplx> q(n - 1);
  if (std::abs(z) <= 1.0) {
    q[n - 2] = c[n - 1];
    for (std::size_t j = n - 2; j > 0; --j) q[j - 1] = c[j] + z * q[j];
  } else {
    q[0] = -c[0] / z;
    for (std::size_t j = 1; j + 1 < n; ++j) q[j] = (q[j - 1] - c[j]) / z;
  }
  return q;
}

}  // namespace tph
