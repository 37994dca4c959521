#include "tph/kernel_structure.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "tph/errors.hpp"
#include "tph/wiener_hopf.hpp"

namespace tph {

const char* to_string(Sign s) noexcept { return s == Sign::plus ? "plus" : "minus"; }

const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::ThmA_i: return "ThmA_i";
    case Branch::ThmA_ii: return "ThmA_ii";
    case Branch::ThmA_iii: return "ThmA_iii";
    case Branch::ThmB_mixed_odd: return "ThmB_mixed_odd";
    case Branch::ThmB_mixed_even: return "ThmB_mixed_even";
  }
  return "?";
}

const char* to_string(CoburnClass c) noexcept {
  switch (c) {
    case CoburnClass::MinusHm1: return "MinusHm1";
    case CoburnClass::PlusH1: return "PlusH1";
    case CoburnClass::PlusH0: return "PlusH0";
    case CoburnClass::MinusH0: return "MinusH0";
    case CoburnClass::None: return "None";
  }
  return "?";
}

const char* to_string(CorollaryCase c) noexcept {
  switch (c) {
    case CorollaryCase::IndexOneSigmaOne: return "IndexOneSigmaOne";
    case CorollaryCase::IndexMinusOneSigmaOne: return "IndexMinusOneSigmaOne";
    case CorollaryCase::IndexZero: return "IndexZero";
  }
  return "?";
}

namespace {

constexpr double kKernelTol = 1e-8;

bool in_kernel(const RationalSymbol& g, const HardyFunction& f) {
  return hardy_norm(apply_toeplitz(g, f)) <= kKernelTol * std::max(1.0, hardy_norm(f));
}

HardyFunction normalized(const HardyFunction& f) {
  const double n = hardy_norm(f);
  return n > 0.0 ? cplx(1.0 / n) * f : f;
}

struct KernelPart {
  std::vector<HardyFunction> basis;
  Contributions contributions;
};

// phi for precomputed c and a~^-1.
HardyFunction phi_impl(const RationalSymbol& c, const RationalSymbol& at_inv, const HardyFunction& s,
                       Sign sign) {
  if (s.is_zero()) return {};
  const HardyFunction y = right_inverse_apply(c, apply_toeplitz(at_inv, s));
  const HardyFunction jy = apply_jqgp(c, y);
  const HardyFunction js = apply_jqgp(at_inv, s);
  return sign == Sign::plus ? y - jy + js : y + jy - js;
}

KernelPart kernel_only(const MatchingAnalysis& m, Sign sign);

// Mixed quadrant: kappa1 < 0 < kappa2.
KernelPart kernel_mixed(const MatchingAnalysis& m, Sign sign) {
  const int n = (1 - m.kappa1) / 2;  // 1 >= 2n + kappa1 >= 0
  const auto [as, bs] = shift_pair(m.a, m.b, n);
  const KernelPart w = kernel_only(analyze(as, bs), sign);
  KernelPart out;
  if (w.basis.empty()) return out;

  std::vector<HardyFunction> ws;
  for (const HardyFunction& f : w.basis) ws.push_back(normalized(f));
  const auto r = static_cast<Eigen::Index>(ws.size());
  Eigen::MatrixXcd coeffs(n, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto tc = taylor_coeffs(ws[static_cast<std::size_t>(i)], n);
    for (int j = 0; j < n; ++j) coeffs(j, i) = tc[static_cast<std::size_t>(j)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeffs, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-8 * smax && smax > 0.0) ++rank;
  const Eigen::MatrixXcd& v = svd.matrixV();
  const RationalSymbol t_minus_n = LaurentPoly::monomial(-n);
  for (Eigen::Index col = rank; col < r; ++col) {
    HardyFunction u;
    for (Eigen::Index i = 0; i < r; ++i)
      if (std::abs(v(i, col)) > 1e-14) u = u + v(i, col) * ws[static_cast<std::size_t>(i)];
    out.basis.push_back(apply_toeplitz(t_minus_n, u));
  }
  out.contributions.from_phi = static_cast<int>(out.basis.size());
  return out;
}

KernelPart kernel_only(const MatchingAnalysis& m, Sign sign) {
  KernelPart out;
  switch (m.quadrant) {
    case Quadrant::NN:
      return out;
    case Quadrant::NP:
      return kernel_mixed(m, sign);
    case Quadrant::PP:
    case Quadrant::PN: {
      if (m.kappa1 > 0) out.basis = pm_bases(m.c).side(opposite(sign));
      out.contributions.from_pc = static_cast<int>(out.basis.size());
      if (m.quadrant == Quadrant::PP && m.kappa2 > 0) {
        const RationalSymbol at_inv = m.a.tilde().reciprocal();
        const PmBases pd = pm_bases(m.d);
        for (const HardyFunction& s : pd.side(sign)) {
          out.basis.push_back(phi_impl(m.c, at_inv, s, sign));
          ++out.contributions.from_phi;
        }
      }
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<HardyFunction> toeplitz_kernel_basis(const RationalSymbol& g) {
  const WHFactorization f = factorize(g);
  const int dim = -f.index_n;
  std::vector<HardyFunction> out;
  if (dim <= 0) return out;
  const RationalSymbol inv = f.g_plus.reciprocal();
  for (int j = 0; j < dim; ++j) out.push_back(HardyFunction::trusted(inv.shifted(j)));
  return out;
}

PmBases pm_bases(const RationalSymbol& g) {
  if (!is_matching_function(g)) throw Error(ErrorCode::NotMatchingFunction, "g(t) g(1/t) != 1");
  const WHFactorization f = factorize(g);
  PmBases out;
  out.n = -f.index_n;
  out.sigma = signature(f);
  if (out.n <= 0) return out;
  const RationalSymbol inv = f.g_plus.reciprocal();
  const double sigma = out.sigma;
  const int m = out.n / 2;
  auto add = [&](std::vector<HardyFunction>& side, int p, int q, double s) {
    const LaurentPoly poly = LaurentPoly::monomial(p) + LaurentPoly::monomial(q, s * sigma);
    if (!poly.is_zero()) side.push_back(HardyFunction::trusted(inv * RationalSymbol(poly)));
  };
  if (out.n % 2 == 0) {
    for (int k = 0; k < m; ++k) {
      add(out.plus, m - k - 1, m + k, 1.0);
      add(out.minus, m - k - 1, m + k, -1.0);
    }
  } else {
    // k = 0 collapses to t^m (1 +- sigma), which vanishes on one side.
    for (int k = 0; k <= m; ++k) {
      add(out.plus, m + k, m - k, 1.0);
      add(out.minus, m + k, m - k, -1.0);
    }
  }
  return out;
}

HardyFunction pg_project(const RationalSymbol& g, const HardyFunction& f, Sign side) {
  if (!in_kernel(g, f)) throw Error(ErrorCode::NotInKernel, "function is not in ker T(g)");
  const HardyFunction j = apply_jqgp(g, f);
  return cplx(0.5) * (side == Sign::plus ? f + j : f - j);
}

HardyFunction right_inverse_apply(const RationalSymbol& c, const HardyFunction& f) {
  const WHFactorization fc = factorize(c);
  if (fc.index_n > 0) throw Error(ErrorCode::NotRightInvertible, "T(c) has negative index");
  if (f.is_zero()) return {};
  const RationalSymbol inner = fc.g_minus.reciprocal() * f.value().shifted(-fc.index_n);
  const HardyFunction p = apply_toeplitz(1.0, HardyFunction::trusted(inner));
  const HardyFunction out = HardyFunction::trusted((fc.g_plus.reciprocal() * p.value()).reduced());
  const double err = hardy_norm(apply_toeplitz(c, out) - f);
  if (err > 1e-9 * std::max(1.0, hardy_norm(f)))
    throw Error(ErrorCode::NonConvergence, "right inverse fails its postcondition (" + [&] { char s[32]; std::snprintf(s, sizeof s, "%.3e", err); return std::string(s); }() + ")");
  return out;
}

HardyFunction phi_map(const RationalSymbol& a, const RationalSymbol& b, const HardyFunction& s,
                      Sign sign) {
  const auto [c, d] = subordinated_pair(a, b);
  if (-winding_index(c) < 0) throw Error(ErrorCode::NotRightInvertible, "T(c) is not right invertible");
  if (!in_kernel(d, s)) throw Error(ErrorCode::NotInKernel, "s is not in ker T(d)");
  return phi_impl(c, a.tilde().reciprocal(), s, sign);
}

double basis_min_singular_value(const std::vector<HardyFunction>& basis, int terms) {
  if (basis.empty()) return 1.0;
  Eigen::MatrixXcd m(terms, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto c = taylor_coeffs(basis[i], terms);
    for (int j = 0; j < terms; ++j) m(j, static_cast<Eigen::Index>(i)) = c[static_cast<std::size_t>(j)];
    const double nrm = m.col(static_cast<Eigen::Index>(i)).norm();
    if (nrm > 0.0) m.col(static_cast<Eigen::Index>(i)) /= nrm;
  }
  const auto sv = Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
  return sv(sv.size() - 1);
}

KernelDescription kernel_cokernel(const RationalSymbol& a, const RationalSymbol& b, Sign sign) {
  MatchingAnalysis m;
  try {
    m = analyze(a, b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SymbolDegenerateOnCircle)
      throw Error(ErrorCode::NotFredholmPair, e.what());
    throw;
  }
  KernelDescription out;
  out.sign = sign;
  switch (m.quadrant) {
    case Quadrant::PP: out.branch = Branch::ThmA_i; break;
    case Quadrant::NN: out.branch = Branch::ThmA_ii; break;
    case Quadrant::PN: out.branch = Branch::ThmA_iii; break;
    case Quadrant::NP:
      out.branch = (m.kappa1 % 2 != 0) ? Branch::ThmB_mixed_odd : Branch::ThmB_mixed_even;
      break;
  }
  KernelPart ker = kernel_only(m, sign);
  const auto [aa, ba] = adjoint_pair(a, b);
  KernelPart coker = kernel_only(analyze(aa, ba), sign);
  out.kernel_basis = std::move(ker.basis);
  out.cokernel_basis = std::move(coker.basis);
  out.contributions = ker.contributions;
  out.coker_contributions = coker.contributions;
  out.dim_ker = static_cast<int>(out.kernel_basis.size());
  out.dim_coker = static_cast<int>(out.cokernel_basis.size());
  out.index = out.dim_ker - out.dim_coker;
  out.bases_independent = basis_min_singular_value(out.kernel_basis) >= 1e-6 &&
                          basis_min_singular_value(out.cokernel_basis) >= 1e-6;
  return out;
}

std::pair<int, int> defect_numbers(const RationalSymbol& a, const RationalSymbol& b, Sign sign) {
  const KernelDescription k = kernel_cokernel(a, b, sign);
  return {k.dim_ker, k.dim_coker};
}

CoburnVerdict coburn_classify(const RationalSymbol& a, const RationalSymbol& b, Sign sign) {
  winding_index(a);  // a must be invertible on the circle
  CoburnVerdict v;
  const double scale = std::max(1.0, circle_sup(a));
  std::optional<int> k;
  for (int j = -1; j <= 1; ++j)
    if (circle_distance(b, a.shifted(j)) <= 1e-9 * scale) k = j;
  if (k) {
    if (*k == -1 && sign == Sign::minus) v.class_match = CoburnClass::MinusHm1;
    if (*k == 1 && sign == Sign::plus) v.class_match = CoburnClass::PlusH1;
    if (*k == 0) v.class_match = sign == Sign::plus ? CoburnClass::PlusH0 : CoburnClass::MinusH0;
  }

  // Independent route through the index and signature of c.
  if (!b.is_zero() && check_matching(a, b)) {
    const RationalSymbol c = subordinated_pair(a, b).first;
    const WHFactorization f = factorize(c);
    const int kappa1 = -f.index_n;
    if (kappa1 == 0) {
      v.corollary_case = CorollaryCase::IndexZero;
    } else if (f.signature == 1) {
      if (kappa1 == 1 && sign == Sign::plus) v.corollary_case = CorollaryCase::IndexOneSigmaOne;
      if (kappa1 == -1 && sign == Sign::minus) v.corollary_case = CorollaryCase::IndexMinusOneSigmaOne;
    }
  }
  v.guaranteed_onesided = v.class_match != CoburnClass::None || v.corollary_case.has_value();
  return v;
}

}  // namespace tph
