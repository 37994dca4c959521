#include "tph/pc_fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tph/errors.hpp"

namespace tph {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double wrap(double theta) {
  theta = std::fmod(theta, kTwoPi);
  return theta < 0.0 ? theta + kTwoPi : theta;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// s in [0, 1] -> y in [-inf, +inf]
double stretch(double s) {
  if (s <= 0.0) return -kInf;
  if (s >= 1.0) return kInf;
  return std::tan(std::numbers::pi * (s - 0.5));
}

struct Minimum {
  double modulus = kInf;
  double y = 0.0;
};

// Grid minimum of |f(y(s))|, refined by golden section on the neighbouring
// grid cells.
template <class F>
Minimum minimize_over_y(F&& f, int grid) {
  std::vector<double> vals(static_cast<std::size_t>(grid));
  std::size_t best = 0;
  for (int k = 0; k < grid; ++k) {
    const double s = static_cast<double>(k) / (grid - 1);
    vals[static_cast<std::size_t>(k)] = std::abs(f(stretch(s)));
    if (vals[static_cast<std::size_t>(k)] < vals[best]) best = static_cast<std::size_t>(k);
  }
  Minimum out{vals[best], stretch(static_cast<double>(best) / (grid - 1))};

  const double h = 1.0 / (grid - 1);
  double lo = std::max(0.0, static_cast<double>(best) * h - h);
  double hi = std::min(1.0, static_cast<double>(best) * h + h);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  auto g = [&](double s) { return std::abs(f(stretch(s))); };
  double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = g(x2);
    }
  }
  for (const double s : {x1, x2}) {
    const double v = g(s);
    if (v < out.modulus) out = {v, stretch(s)};
  }
  return out;
}

}  // namespace

PCSymbol::PCSymbol(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  if (arcs_.empty()) throw Error(ErrorCode::InvalidSymbol, "a PC symbol needs at least one arc");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (!std::isfinite(a.start) || a.start < 0.0 || a.start >= kTwoPi)
      throw Error(ErrorCode::InvalidSymbol, "arc start outside [0, 2pi)");
    if (!finite(a.value)) throw Error(ErrorCode::InvalidSymbol, "arc value is not finite");
    if (i > 0 && !(a.start > arcs_[i - 1].start))
      throw Error(ErrorCode::InvalidSymbol, "arc starts must increase strictly");
  }
}

std::size_t PCSymbol::arc_index(double theta) const {
  // Last arc whose start is <= theta; angles before the first start belong to
  // the wrapping last arc.
  const auto it = std::upper_bound(arcs_.begin(), arcs_.end(), theta,
                                   [](double v, const Arc& a) { return v < a.start; });
  return it == arcs_.begin() ? arcs_.size() - 1 : static_cast<std::size_t>(it - arcs_.begin()) - 1;
}

cplx PCSymbol::limit_plus(double theta) const { return arcs_[arc_index(wrap(theta))].value; }

cplx PCSymbol::limit_minus(double theta) const {
  theta = wrap(theta);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].start == theta) return arcs_[i == 0 ? arcs_.size() - 1 : i - 1].value;
  }
  return arcs_[arc_index(theta)].value;
}

std::vector<double> PCSymbol::jump_angles() const {
  std::vector<double> out;
  for (const Arc& a : arcs_)
    if (limit_plus(a.start) != limit_minus(a.start)) out.push_back(a.start);
  return out;
}

PCSymbol PCSymbol::negated() const {
  std::vector<Arc> arcs = arcs_;
  for (Arc& a : arcs) a.value = -a.value;
  return PCSymbol(std::move(arcs));
}

cplx nu_p(double y, double p) {
  if (y == kInf) return 1.0;
  if (y == -kInf) return 0.0;
  const cplx z = std::numbers::pi * cplx(y, 1.0 / p);
  // Written through exp(-2|Re z|) so large |y| neither overflows nor cancels.
  if (y >= 0.0) return 1.0 / (1.0 - std::exp(-2.0 * z));
  const cplx w = std::exp(2.0 * z);
  return w / (w - 1.0);
}

cplx h_p(double y, double p) {
  if (std::isinf(y)) return 0.0;
  const cplx z = std::numbers::pi * cplx(y, 1.0 / p);
  if (y >= 0.0) {
    const cplx e = std::exp(-z);
    return 2.0 * e / (1.0 - e * e);
  }
  const cplx e = std::exp(z);
  return -2.0 * e / (1.0 - e * e);
}

PCFredholmReport pc_fredholm_test(const PCSymbol& a, const PCSymbol& b, double p, int grid_size) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidSymbol, "p must lie in (1, inf)");
  if (grid_size < 2) throw Error(ErrorCode::InvalidSymbol, "grid needs at least two points");
  for (const auto& arc : a.arcs())
    if (arc.value == 0.0) throw Error(ErrorCode::InvalidSymbol, "a vanishes on an arc");

  const cplx two_i(0.0, 2.0);
  auto blend = [&](const PCSymbol& s, double theta, cplx nu) {
    return s.limit_plus(theta) * nu + s.limit_minus(theta) * (1.0 - nu);
  };

  // Points of the open upper half-circle where either the symbols or their
  // values at the conjugate point jump, plus one point inside each gap.
  std::vector<double> cuts;
  for (const PCSymbol* s : {&a, &b}) {
    for (const double th : s->jump_angles()) {
      if (th > 0.0 && th < std::numbers::pi) cuts.push_back(th);
      if (th > std::numbers::pi) cuts.push_back(kTwoPi - th);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> thetas = cuts;
  double prev = 0.0;
  for (const double c : cuts) {
    thetas.push_back(0.5 * (prev + c));
    prev = c;
  }
  thetas.push_back(0.5 * (prev + std::numbers::pi));

  PCFredholmReport rep;
  rep.p = p;
  PCWitness det_w{0.0, 0.0, kInf};
  for (const double th : thetas) {
    const double thc = kTwoPi - th;
    const cplx b12 = (b.limit_plus(th) - b.limit_minus(th)) / two_i;
    const cplx b21 = (b.limit_minus(thc) - b.limit_plus(thc)) / two_i;
    auto det = [&](double y) {
      const cplx nu = nu_p(y, p), h = h_p(y, p);
      return blend(a, th, nu) * blend(a, thc, nu) - b12 * b21 * h * h;
    };
    const Minimum m = minimize_over_y(det, grid_size);
    if (m.modulus < det_w.modulus) det_w = {std::polar(1.0, th), m.y, m.modulus};
  }

  PCWitness scalar_w{0.0, 0.0, kInf};
  for (const double th : {0.0, std::numbers::pi}) {
    const double t = th == 0.0 ? 1.0 : -1.0;
    const cplx jump = b.limit_plus(th) - b.limit_minus(th);
    auto scalar = [&](double y) { return blend(a, th, nu_p(y, p)) + t * jump / 2.0 * h_p(y, p); };
    const Minimum m = minimize_over_y(scalar, grid_size);
    if (m.modulus < scalar_w.modulus) scalar_w = {t, m.y, m.modulus};
  }

  rep.min_matrix_det_modulus = det_w.modulus;
  rep.min_scalar_modulus = scalar_w.modulus;
  rep.witnesses = {det_w, scalar_w};
  rep.is_fredholm = rep.min_matrix_det_modulus > kPcEpsilon && rep.min_scalar_modulus > kPcEpsilon;
  return rep;
}

PCSweep pc_p_sweep(const PCSymbol& a, const PCSymbol& b, const std::vector<double>& p_list,
                   int grid_size) {
  PCSweep out;
  for (const double p : p_list) {
    out.reports.push_back(pc_fredholm_test(a, b, p, grid_size));
    const auto n = out.reports.size();
    if (n >= 2 && out.reports[n - 1].is_fredholm != out.reports[n - 2].is_fredholm)
      out.critical_candidates.emplace_back(out.reports[n - 2].p, p);
  }
  return out;
}

}  // namespace tph
