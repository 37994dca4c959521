#include "tph/laurent_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tph/simd/kernels.hpp"

namespace tph {

LaurentPoly::LaurentPoly(cplx constant) {
  if (constant != 0.0) c_.push_back(constant);
}

LaurentPoly::LaurentPoly(int low, std::vector<cplx> coeffs) : low_(low), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(int k, cplx c) { return LaurentPoly(k, {c}); }

LaurentPoly LaurentPoly::from_terms(const std::map<int, cplx>& terms) {
  if (terms.empty()) return {};
  const int lo = terms.begin()->first;
  const int hi = terms.rbegin()->first;
  std::vector<cplx> c(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (const auto& [k, v] : terms) c[static_cast<std::size_t>(k - lo)] += v;
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{1.0};
  for (const cplx z : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= z * c[k];
    }
    c = std::move(next);
  }
  return LaurentPoly(0, std::move(c));
}

void LaurentPoly::trim() {
  auto first = std::find_if(c_.begin(), c_.end(), [](cplx v) { return v != 0.0; });
  if (first == c_.end()) {
    c_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(c_.rbegin(), c_.rend(), [](cplx v) { return v != 0.0; }).base();
  low_ += static_cast<int>(first - c_.begin());
  c_ = std::vector<cplx>(first, last);
}

cplx LaurentPoly::coeff(int k) const noexcept {
  if (k < low_ || k > high()) return 0.0;
  return c_[static_cast<std::size_t>(k - low_)];
}

std::map<int, cplx> LaurentPoly::terms() const {
  std::map<int, cplx> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0.0) out.emplace(low_ + static_cast<int>(i), c_[i]);
  return out;
}

cplx LaurentPoly::eval(cplx t) const {
  if (c_.empty()) return 0.0;
  cplx acc = c_.back();
  for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * t + c_[k];
  if (low_ != 0) acc *= std::pow(t, low_);
  return acc;
}

void LaurentPoly::eval_many(std::span<const cplx> points, std::span<cplx> out) const {
  simd::horner_eval(c_, points, out);
  if (low_ != 0 && !c_.empty())
    for (std::size_t i = 0; i < points.size(); ++i) out[i] *= std::pow(points[i], low_);
}

double LaurentPoly::max_abs() const noexcept {
  double m = 0.0;
  for (const cplx v : c_) m = std::max(m, std::abs(v));
  return m;
}

double LaurentPoly::norm1() const noexcept {
  double s = 0.0;
  for (const cplx v : c_) s += std::abs(v);
  return s;
}

LaurentPoly LaurentPoly::tilde() const {
  std::vector<cplx> r(c_.rbegin(), c_.rend());
  return LaurentPoly(-high(), std::move(r));
}

LaurentPoly LaurentPoly::conj_coeffs() const {
  LaurentPoly r = *this;
  for (cplx& v : r.c_) v = std::conj(v);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::chopped(double rel) const {
  const double cut = rel * max_abs();
  auto keep = [cut](cplx v) { return std::abs(v) > cut; };
  auto first = std::find_if(c_.begin(), c_.end(), keep);
  if (first == c_.end()) return {};
  auto last = std::find_if(c_.rbegin(), c_.rend(), keep).base();
  return LaurentPoly(low_ + static_cast<int>(first - c_.begin()), std::vector<cplx>(first, last));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (cplx& v : r.c_) v = -v;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<cplx> r(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(low_ - lo)] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    r[i + static_cast<std::size_t>(o.low_ - lo)] += o.c_[i];
  low_ = lo;
  c_ = std::move(r);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  std::vector<cplx> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  low_ += o.low_;
  c_ = std::move(r);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  for (cplx& v : c_) v *= s;
  trim();
  return *this;
}

LaurentPoly lp_arith(const LaurentPoly& x, const LaurentPoly& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
  }
  return {};
}

double max_circle_distance(const LaurentPoly& x, const LaurentPoly& y, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx t = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    worst = std::max(worst, std::abs(x.eval(t) - y.eval(t)));
  }
  return worst;
}

}  // namespace tph
