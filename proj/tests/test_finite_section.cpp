#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tph/errors.hpp"
#include "tph/finite_section.hpp"

using namespace tph;
using namespace tph::testing;

namespace {

LaurentPoly lp(int low, std::vector<cplx> c) { return {low, std::move(c)}; }
RationalSymbol worked_b() { return {lp(0, {-0.5, 1.0}), lp(0, {-1.0, 0.5})}; }

Eigen::MatrixXcd mat(std::initializer_list<std::initializer_list<cplx>> rows) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const cplx v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(BuildMatrix, Examples) {
  const LaurentPoly a = lp(0, {2.0, 1.0});
  TruncationMatrix m = build_matrix(a, a.tilde(), Sign::plus, 3);
  EXPECT_LT((m.entries - mat({{2, 0, 0}, {1, 2, 0}, {0, 1, 2}})).norm(), 1e-14);
  m = build_matrix(0.0, LaurentPoly::monomial(1), Sign::plus, 2);
  EXPECT_LT((m.entries - mat({{1, 0}, {0, 0}})).norm(), 1e-15);
  m = build_matrix(1.0, 0.0, Sign::plus, 4);
  EXPECT_LT((m.entries - Eigen::MatrixXcd::Identity(4, 4)).norm(), 1e-15);
}

TEST(BuildMatrix, MinusSignNegatesHankel) {
  const TruncationMatrix p = build_matrix(0.0, worked_b(), Sign::plus, 5);
  const TruncationMatrix q = build_matrix(0.0, worked_b(), Sign::minus, 5);
  EXPECT_LT((p.entries + q.entries).norm(), 1e-15);
}

TEST(BlockV, Examples) {
  MatchingAnalysis m = analyze(1.0, 1.0);
  const TruncationMatrix v = build_block_v_matrix(m, 2);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
  expect.block(0, 2, 2, 2).setIdentity();
  expect.block(2, 0, 2, 2) = -Eigen::MatrixXcd::Identity(2, 2);
  expect.block(2, 2, 2, 2).setIdentity();
  EXPECT_LT((v.entries - expect).norm(), 1e-15);

  m = analyze(1.0, worked_b());
  const int kc = numeric_kernel_dim(build_toeplitz(m.c, 64, 128)).numeric_kernel_dim;
  const int kd = numeric_kernel_dim(build_toeplitz(m.d, 64, 128)).numeric_kernel_dim;
  EXPECT_EQ(numeric_kernel_dim(build_block_v_matrix(m, 64, 128)).numeric_kernel_dim, kc + kd);

  const LaurentPoly a = lp(0, {2.0, 1.0});
  EXPECT_EQ(numeric_kernel_dim(build_block_v_matrix(analyze(a, a.tilde()), 64)).numeric_kernel_dim, 0);
}

TEST(BlockV, DecompositionWhenCRightInvertible) {
  Rng rng(61);
  int tested = 0;
  while (tested < 10) {
    const auto [a, b] = random_pair(rng, -3, 3);
    const MatchingAnalysis m = analyze(a, b);
    if (m.kappa1 < 0) continue;
    const int kc = numeric_kernel_dim(build_toeplitz(m.c, 64, 128)).numeric_kernel_dim;
    const int kd = numeric_kernel_dim(build_toeplitz(m.d, 64, 128)).numeric_kernel_dim;
    EXPECT_EQ(kc, m.kappa1);
    EXPECT_EQ(kd, std::max(m.kappa2, 0));
    EXPECT_EQ(numeric_kernel_dim(build_block_v_matrix(m, 64, 128)).numeric_kernel_dim, kc + kd);
    ++tested;
  }
}

TEST(NumericKernelDim, Examples) {
  TruncationMatrix id;
  id.n_rows = id.n_cols = 5;
  id.entries = Eigen::MatrixXcd::Identity(5, 5);
  EXPECT_EQ(numeric_kernel_dim(id).numeric_kernel_dim, 0);
  EXPECT_EQ(numeric_kernel_dim(build_toeplitz(LaurentPoly::monomial(1), 16, 32)).numeric_kernel_dim, 0);
  EXPECT_EQ(numeric_kernel_dim(build_toeplitz(LaurentPoly::monomial(-1), 16, 32)).numeric_kernel_dim, 1);
  EXPECT_EQ(numeric_kernel_dim(build_matrix(1.0, worked_b(), Sign::plus, 64)).numeric_kernel_dim, 1);
  EXPECT_EQ(numeric_kernel_dim(build_matrix(1.0, worked_b(), Sign::plus, 64, 128)).numeric_kernel_dim, 1);
}

TEST(TruncateHardy, Examples) {
  TruncatedHardy t = truncate_hardy(HardyFunction(RationalSymbol(1.0, lp(0, {-2.0, 1.0}))), 3);
  EXPECT_LT(max_abs_diff(t.coeffs, {-0.5, -0.25, -0.125}), 1e-15);
  EXPECT_NEAR(t.tail_bound, 0.125, 1e-15);
  t = truncate_hardy(HardyFunction(RationalSymbol(lp(0, {1.0, 1.0}))), 4);
  EXPECT_LT(max_abs_diff(t.coeffs, {1.0, 1.0, 0.0, 0.0}), 1e-15);
  t = truncate_hardy(HardyFunction(), 3);
  EXPECT_LT(max_abs_diff(t.coeffs, {0.0, 0.0, 0.0}), 1e-15);
}

TEST(ResidualCheck, Examples) {
  const LaurentPoly a = lp(0, {2.0, 1.0});
  const HardyFunction e(RationalSymbol(1.0));
  EXPECT_LE(residual_check(build_matrix(a, a * LaurentPoly::monomial(1), Sign::minus, 64), e), 1e-12);
  EXPECT_GT(residual_check(build_matrix(a, a.tilde(), Sign::plus, 64), e), 1e-3);
  const HardyFunction k(RationalSymbol(1.0, lp(0, {-2.0, 1.0})));
  EXPECT_LE(residual_check(build_matrix(1.0, worked_b(), Sign::plus, 64), k), 1e-6);
  try {
    residual_check(build_matrix(1.0, 0.0, Sign::plus, 4), HardyFunction());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ZeroVector);
  }
}

TEST(Oracle, RetriesOnSmallSections) {
  // Kernel of T(t^-6) at N = 4 cannot hold six vectors; the retry reaches 16.
  const RationalSymbol a = LaurentPoly::monomial(-6);
  const KernelDescription k = kernel_cokernel(a, 1.0, Sign::plus);
  ASSERT_EQ(k.dim_ker, 6);
  const OracleRun run = run_oracle(a, 1.0, Sign::plus, k, 4);
  EXPECT_TRUE(run.agree);
  EXPECT_EQ(run.n_used, 8);
  EXPECT_FALSE(run.warnings.empty());
}
