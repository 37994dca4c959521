#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "tph/hardy.hpp"
#include "tph/kernel_structure.hpp"

namespace tph {

struct TruncationMatrix {
  int n_rows = 0;
  int n_cols = 0;
  Eigen::MatrixXcd entries;  // column-major
  std::string provenance;
};

struct OracleReport {
  int numeric_kernel_dim = 0;
  std::vector<double> singular_values;
  std::vector<std::pair<int, double>> residuals;
  bool agrees_with_analytic = false;
};

/// Rows j < rows, columns k < n of (a_{j-k} + sign b_{j+k+1}); rows defaults to n.
TruncationMatrix build_matrix(const RationalSymbol& a, const RationalSymbol& b, Sign sign, int n,
                              int rows = 0);

/// [[0, T(d)], [-T(c), T(a~^-1)]] with rows x n blocks.
TruncationMatrix build_block_v_matrix(const MatchingAnalysis& m, int n, int rows = 0);

/// Toeplitz section of a single symbol.
TruncationMatrix build_toeplitz(const RationalSymbol& g, int n, int rows = 0);

inline constexpr double kSvdCutoff = 1e-8;

/// Kernel dimension n_cols - #{singular values >= cutoff * max}.
OracleReport numeric_kernel_dim(const TruncationMatrix& m, double cutoff = kSvdCutoff);

struct TruncatedHardy {
  std::vector<cplx> coeffs;
  double tail_bound = 0.0;  // rho^N with rho = max 1/|pole|
};

TruncatedHardy truncate_hardy(const HardyFunction& f, int n);

/// ||M x|| / ||x|| for the Taylor vector x of f. Throws ZeroVector.
double residual_check(const TruncationMatrix& m, const HardyFunction& f);

/// Oracle outcome for one (a, b, sign) compared against the analytic description.
struct OracleRun {
  int n_used = 0;
  OracleReport kernel;
  OracleReport cokernel;
  bool agree = false;
  std::vector<std::string> warnings;
};

/// Tall 2N x N sections of the operator and of its adjoint; on disagreement
/// retries at 2N and 4N before giving up.
OracleRun run_oracle(const RationalSymbol& a, const RationalSymbol& b, Sign sign,
                     const KernelDescription& analytic, int n = 64);

}  // namespace tph
