#include "tph/finite_section.hpp"

#include <cmath>

#include "tph/errors.hpp"
#include "tph/roots.hpp"
#include "tph/simd/kernels.hpp"

namespace tph {

namespace {

void fill_toeplitz(Eigen::Ref<Eigen::MatrixXcd> block, const RationalSymbol& g, double scale) {
  const auto rows = static_cast<int>(block.rows());
  const auto cols = static_cast<int>(block.cols());
  const auto c = fourier_coeffs(g, -(cols - 1), rows - 1);
  for (int k = 0; k < cols; ++k)
    for (int j = 0; j < rows; ++j) block(j, k) = scale * c[static_cast<std::size_t>(j - k + cols - 1)];
}

}  // namespace

TruncationMatrix build_matrix(const RationalSymbol& a, const RationalSymbol& b, Sign sign, int n,
                              int rows) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "section size must be positive");
  if (rows <= 0) rows = n;
  TruncationMatrix m;
  m.n_rows = rows;
  m.n_cols = n;
  m.entries = Eigen::MatrixXcd::Zero(rows, n);
  fill_toeplitz(m.entries, a, 1.0);
  const auto bc = fourier_coeffs(b, 1, rows + n - 1);
  const double s = sign_value(sign);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < rows; ++j) m.entries(j, k) += s * bc[static_cast<std::size_t>(j + k)];
  m.provenance = std::string("T(a)") + (sign == Sign::plus ? "+" : "-") + "H(b), N=" + std::to_string(n) +
                 ", rows=" + std::to_string(rows);
  return m;
}

TruncationMatrix build_toeplitz(const RationalSymbol& g, int n, int rows) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "section size must be positive");
  if (rows <= 0) rows = n;
  TruncationMatrix m;
  m.n_rows = rows;
  m.n_cols = n;
  m.entries = Eigen::MatrixXcd::Zero(rows, n);
  fill_toeplitz(m.entries, g, 1.0);
  m.provenance = "T(g), N=" + std::to_string(n) + ", rows=" + std::to_string(rows);
  return m;
}

TruncationMatrix build_block_v_matrix(const MatchingAnalysis& an, int n, int rows) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "section size must be positive");
  if (rows <= 0) rows = n;
  TruncationMatrix m;
  m.n_rows = 2 * rows;
  m.n_cols = 2 * n;
  m.entries = Eigen::MatrixXcd::Zero(2 * rows, 2 * n);
  fill_toeplitz(m.entries.block(0, n, rows, n), an.d, 1.0);
  fill_toeplitz(m.entries.block(rows, 0, rows, n), an.c, -1.0);
  fill_toeplitz(m.entries.block(rows, n, rows, n), an.a.tilde().reciprocal(), 1.0);
  m.provenance = "V-block, N=" + std::to_string(n) + ", rows=" + std::to_string(rows);
  return m;
}

OracleReport numeric_kernel_dim(const TruncationMatrix& m, double cutoff) {
  OracleReport r;
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(m.entries);
  const auto& sv = svd.singularValues();
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (const double s : r.singular_values)
    if (smax > 0.0 && s >= cutoff * smax) ++rank;
  r.numeric_kernel_dim = m.n_cols - rank;
  return r;
}

TruncatedHardy truncate_hardy(const HardyFunction& f, int n) {
  TruncatedHardy t;
  t.coeffs = taylor_coeffs(f, n);
  if (f.is_zero() || f.value().is_laurent()) return t;
  double rho = 0.0;
  for (const Root& r : polynomial_roots(f.value().den().coeffs())) rho = std::max(rho, 1.0 / std::abs(r.value));
  t.tail_bound = std::pow(rho, n);
  return t;
}

double residual_check(const TruncationMatrix& m, const HardyFunction& f) {
  const auto x = truncate_hardy(f, m.n_cols).coeffs;
  double xn = 0.0;
  for (const cplx v : x) xn += std::norm(v);
  if (xn == 0.0) throw Error(ErrorCode::ZeroVector, "residual of the zero vector");
  std::vector<cplx> y(static_cast<std::size_t>(m.n_rows));
  simd::cmatvec(m.entries.data(), static_cast<std::size_t>(m.n_rows), static_cast<std::size_t>(m.n_cols),
                static_cast<std::size_t>(m.entries.outerStride()), x.data(), y.data());
  double yn = 0.0;
  for (const cplx v : y) yn += std::norm(v);
  return std::sqrt(yn / xn);
}

OracleRun run_oracle(const RationalSymbol& a, const RationalSymbol& b, Sign sign,
                     const KernelDescription& analytic, int n) {
  const auto [aa, ba] = adjoint_pair(a, b);
  OracleRun run;
  for (int attempt = 0, size = n; attempt < 3; ++attempt, size *= 2) {
    run.n_used = size;
    const TruncationMatrix mk = build_matrix(a, b, sign, size, 2 * size);
    const TruncationMatrix mc = build_matrix(aa, ba, sign, size, 2 * size);
    run.kernel = numeric_kernel_dim(mk);
    run.cokernel = numeric_kernel_dim(mc);
    bool ok = run.kernel.numeric_kernel_dim == analytic.dim_ker &&
              run.cokernel.numeric_kernel_dim == analytic.dim_coker;
    for (std::size_t i = 0; i < analytic.kernel_basis.size(); ++i) {
      const double r = residual_check(mk, analytic.kernel_basis[i]);
      run.kernel.residuals.emplace_back(static_cast<int>(i), r);
      ok = ok && r <= 1e-6;
    }
    for (std::size_t i = 0; i < analytic.cokernel_basis.size(); ++i) {
      const double r = residual_check(mc, analytic.cokernel_basis[i]);
      run.cokernel.residuals.emplace_back(static_cast<int>(i), r);
      ok = ok && r <= 1e-6;
    }
    run.kernel.agrees_with_analytic = ok;
    run.cokernel.agrees_with_analytic = ok;
    if (ok) {
      run.agree = true;
      return run;
    }
    if (attempt < 2)
      run.warnings.push_back("oracle disagreement at N=" + std::to_string(size) + ", retrying at N=" +
                             std::to_string(2 * size));
  }
  run.warnings.push_back("oracle disagreement persists at N=" + std::to_string(run.n_used));
  return run;
}

}  // namespace tph
