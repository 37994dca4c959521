// End-to-end acceptance run. Prints one PASS/FAIL line per criterion (with
// indented detail lines) and exits nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "../test_support.hpp"
#include "tph/errors.hpp"
#include "tph/finite_section.hpp"
#include "tph/kernel_structure.hpp"
#include "tph/matching.hpp"
#include "tph/pc_fredholm.hpp"
#include "tph/wiener_hopf.hpp"

namespace {

using namespace tph;
using namespace tph::testing;

constexpr int kN = 64;
constexpr double kSignatureTol = 1e-7;
constexpr double kCorollaryTol = 1e-8;
constexpr int kCorollarySamples = 128;
constexpr double kResidualTol = 1e-6;
constexpr double kInvolutionTol = 1e-8;
constexpr double kShiftTol = 1e-9;
constexpr double kOperationalTol = 1e-10;
constexpr double kPcTol = 1e-10;

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

LaurentPoly lp(int low, std::vector<cplx> c) { return {low, std::move(c)}; }
RationalSymbol worked_b() { return {lp(0, {-0.5, 1.0}), lp(0, {-1.0, 0.5})}; }
// (t - alpha) / (alpha t - 1) satisfies b b~ = 1.
RationalSymbol blaschke(cplx alpha) { return {lp(0, {-alpha, 1.0}), lp(0, {-1.0, alpha})}; }

// Kernel and cokernel dimensions from tall finite sections.
std::pair<int, int> oracle_defects(const RationalSymbol& a, const RationalSymbol& b, Sign s) {
  const auto [aa, ba] = adjoint_pair(a, b);
  return {numeric_kernel_dim(build_matrix(a, b, s, kN, 2 * kN)).numeric_kernel_dim,
          numeric_kernel_dim(build_matrix(aa, ba, s, kN, 2 * kN)).numeric_kernel_dim};
}

Verdict signature_dichotomy() {
  Verdict v;
  Rng rng(1001);
  double worst_sigma = 0.0, worst_identity = 0.0;
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly h = random_laurent(rng, 4);
    const RationalSymbol g(h, h.tilde());
    const WHFactorization f = factorize(g);
    const cplx sigma = f.g_plus.eval(0.0);
    worst_sigma = std::max(worst_sigma, std::abs(std::abs(sigma) - 1.0));
    const double s = sigma.real() > 0 ? 1.0 : -1.0;
    for (const cplx t : circle_points(kCorollarySamples))
      worst_identity = std::max(worst_identity, std::abs(f.g_plus.eval(t) * f.g_minus.eval(1.0 / t) - s));
  }
  v.check(worst_sigma <= kSignatureTol, "||g+(0)| - 1| = " + sci(worst_sigma));
  v.check(worst_identity <= kCorollaryTol, "g+ g-~ - sigma = " + sci(worst_identity));
  v.note("100 functions, max ||g+(0)|-1| = " + sci(worst_sigma) + ", max |g+ g-~ - sigma| = " + sci(worst_identity));
  return v;
}

// Symbols for criteria 2 and 3: t^-1..t^-4 and 20 random g with ind T(g) in 1..4.
std::vector<RationalSymbol> kernel_symbols() {
  std::vector<RationalSymbol> out;
  for (int n = 1; n <= 4; ++n) out.emplace_back(LaurentPoly::monomial(-n));
  Rng rng(2002);
  std::uniform_int_distribution<int> shift(-6, 0), coin(0, 1);
  int found = 0;
  while (found < 20) {
    const RationalSymbol g =
        random_matching(rng, 2, 0, coin(rng) ? 1.0 : -1.0) * RationalSymbol(LaurentPoly::monomial(shift(rng)));
    const int n = -winding_index(g);
    if (n < 1 || n > 4) continue;
    out.push_back(g);
    ++found;
  }
  return out;
}

Verdict kernel_basis_theorem(const std::vector<RationalSymbol>& symbols) {
  Verdict v;
  double worst = 0.0;
  for (const RationalSymbol& g : symbols) {
    const PmBases pm = pm_bases(g);
    const int n = pm.n, m = n / 2;
    const TruncationMatrix tn = build_toeplitz(g, kN, 2 * kN);
    const int numeric = numeric_kernel_dim(tn).numeric_kernel_dim;
    v.check(numeric == n, "numeric dim " + std::to_string(numeric) + " vs index " + std::to_string(n));
    const int want_plus = n % 2 ? m + (1 + pm.sigma) / 2 : m;
    const int want_minus = n % 2 ? m + (1 - pm.sigma) / 2 : m;
    v.check(static_cast<int>(pm.plus.size()) == want_plus && static_cast<int>(pm.minus.size()) == want_minus,
            "split sizes for n = " + std::to_string(n));
    for (const auto* side : {&pm.plus, &pm.minus})
      for (const HardyFunction& f : *side) worst = std::max(worst, residual_check(tn, f));
    for (const HardyFunction& f : toeplitz_kernel_basis(g)) worst = std::max(worst, residual_check(tn, f));
  }
  v.check(worst <= kResidualTol, "residual " + sci(worst));
  v.note(std::to_string(symbols.size()) + " symbols, max basis residual " + sci(worst));
  return v;
}

Verdict involution(const std::vector<RationalSymbol>& symbols) {
  Verdict v;
  double worst = 0.0;
  for (const RationalSymbol& g : symbols) {
    const PmBases pm = pm_bases(g);
    std::vector<HardyFunction> all = toeplitz_kernel_basis(g);
    all.insert(all.end(), pm.plus.begin(), pm.plus.end());
    all.insert(all.end(), pm.minus.begin(), pm.minus.end());
    for (const HardyFunction& f : all) {
      const double err = hardy_norm(apply_jqgp(g, apply_jqgp(g, f)) - f) / std::max(1.0, hardy_norm(f));
      worst = std::max(worst, err);
    }
  }
  v.check(worst <= kInvolutionTol, "involution error " + sci(worst));
  v.note("max |(JQgP)^2 f - f| = " + sci(worst));
  return v;
}

Verdict worked_chain() {
  Verdict v;
  const RationalSymbol one(1.0), b = worked_b(), bt = worked_b().tilde();

  // Stated defect numbers for I+H(b), I-H(b), I+H(b~), I-H(b~).
  struct Case {
    const char* name;
    RationalSymbol b;
    Sign s;
    std::pair<int, int> stated;
  };
  const std::vector<Case> cases = {{"I+H(b)", b, Sign::plus, {1, 0}},
                                   {"I-H(b)", b, Sign::minus, {0, 1}},
                                   {"I+H(b~)", bt, Sign::plus, {0, 1}},
                                   {"I-H(b~)", bt, Sign::minus, {1, 0}}};
  bool defects_ok = true;
  std::string got;
  for (const Case& c : cases) {
    const auto analytic = defect_numbers(one, c.b, c.s);
    const auto numeric = oracle_defects(one, c.b, c.s);
    got += std::string(" ") + c.name + "=(" + std::to_string(analytic.first) + "," + std::to_string(analytic.second) +
           ")";
    defects_ok = defects_ok && analytic == c.stated && numeric == c.stated;
  }
  v.check(defects_ok, "4a defect numbers");
  v.note(std::string(defects_ok ? "PASS" : "FAIL") + " 4a stated (1,0),(0,1),(0,1),(1,0); computed" + got);

  // Kernel of I+H(b) spanned by 1/(t-2).
  const KernelDescription k = kernel_cokernel(one, b, Sign::plus);
  bool span_ok = k.dim_ker == 1;
  double res = 1.0;
  if (span_ok) {
    const RationalSymbol target(1.0, lp(0, {-2.0, 1.0}));
    const RationalSymbol ratio = (k.kernel_basis[0].value() / target).reduced();
    span_ok = ratio.is_laurent() && ratio.num().span_degree() == 0;
    res = residual_check(build_matrix(one, b, Sign::plus, kN, 2 * kN), k.kernel_basis[0]);
  }
  v.check(span_ok && res <= kResidualTol, "4b kernel span");
  v.note(std::string(span_ok && res <= kResidualTol ? "PASS" : "FAIL") + " 4b ker(I+H(b)) = span 1/(t-2), residual " +
         sci(res));

  // ind+ + ind- = kappa1 + kappa2 in each pairing.
  bool add_ok = true;
  std::string sums;
  for (const RationalSymbol& bb : {b, bt}) {
    const MatchingAnalysis m = analyze(one, bb);
    const int total = kernel_cokernel(one, bb, Sign::plus).index + kernel_cokernel(one, bb, Sign::minus).index;
    add_ok = add_ok && total == m.kappa1 + m.kappa2 && total == 0;
    sums += " " + std::to_string(total) + "=" + std::to_string(m.kappa1) + "+" + std::to_string(m.kappa2);
  }
  v.check(add_ok, "4c index additivity");
  v.note(std::string(add_ok ? "PASS" : "FAIL") + " 4c ind+ + ind- = kappa1 + kappa2:" + sums);
  return v;
}

Verdict coburn() {
  Verdict v;
  Rng rng(5005);
  int tested = 0, violations = 0;
  while (tested < 20) {
    std::uniform_int_distribution<int> deg(0, 3);
    const int d = deg(rng);
    const LaurentPoly a = poly_with_roots(rng, d / 2, d - d / 2, -(d / 2));
    const RationalSymbol t(LaurentPoly::monomial(1)), ti(LaurentPoly::monomial(-1));
    const std::vector<std::pair<RationalSymbol, Sign>> classes = {
        {a * t, Sign::plus}, {a * ti, Sign::minus}, {RationalSymbol(a), Sign::plus}, {RationalSymbol(a), Sign::minus}};
    for (const auto& [b, s] : classes) {
      const auto [ker, coker] = oracle_defects(a, b, s);
      if (std::min(ker, coker) != 0) {
        ++violations;
        v.note("ker " + std::to_string(ker) + ", coker " + std::to_string(coker));
      }
    }
    ++tested;
  }
  v.check(violations == 0, std::to_string(violations) + " two-sided defects");
  v.note("20 symbols x 4 classes, " + std::to_string(violations) + " with min(ker, coker) > 0");
  return v;
}

Verdict block_decomposition() {
  Verdict v;
  Rng rng(6006);
  int tested = 0, mismatches = 0;
  while (tested < 10) {
    const auto [a, b] = random_pair(rng, -3, 3);
    const MatchingAnalysis m = analyze(a, b);
    if (m.kappa1 < 0) continue;  // T(c) right-invertible
    const int kc = numeric_kernel_dim(build_toeplitz(m.c, kN, 2 * kN)).numeric_kernel_dim;
    const int kd = numeric_kernel_dim(build_toeplitz(m.d, kN, 2 * kN)).numeric_kernel_dim;
    const int kv = numeric_kernel_dim(build_block_v_matrix(m, kN, 2 * kN)).numeric_kernel_dim;
    if (kv != kc + kd) {
      ++mismatches;
      v.note("V " + std::to_string(kv) + " vs " + std::to_string(kc) + " + " + std::to_string(kd));
    }
    ++tested;
  }
  v.check(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.note("10 pairs, " + std::to_string(mismatches) + " mismatches");
  return v;
}

Verdict shift_lemma() {
  Verdict v;
  Rng rng(7007);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto [a, b] = random_pair(rng);
    const auto [c, d] = subordinated_pair(a, b);
    for (int n = 1; n <= 3; ++n) {
      const auto [as, bs] = shift_pair(a, b, n);
      const auto [cs, ds] = subordinated_pair(as, bs);
      const RationalSymbol c_expect = c * RationalSymbol(LaurentPoly::monomial(-2 * n));
      worst = std::max({worst, circle_distance(cs, c_expect) / std::max(1.0, circle_sup(c)),
                        circle_distance(ds, d) / std::max(1.0, circle_sup(d))});
    }
  }
  double op = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const RationalSymbol tn(LaurentPoly::monomial(n));
    for (int i = 0; i < 5; ++i) {
      const HardyFunction f = random_hardy(rng);
      op = std::max(op, hardy_norm(apply_hankel(tn, apply_toeplitz(tn, f))));
    }
  }
  v.check(worst <= kShiftTol, "shifted subordinated pair " + sci(worst));
  v.check(op <= kOperationalTol, "H(t^n) T(t^n) = " + sci(op));
  v.note("max pair deviation " + sci(worst) + ", max |H(t^n)T(t^n) f| " + sci(op));
  return v;
}

Verdict mixed_quadrant() {
  Verdict v;
  std::vector<std::pair<RationalSymbol, RationalSymbol>> pairs;
  for (const cplx alpha : {cplx(0.5), cplx(0.3), cplx(-0.4), cplx(0.2, 0.5)})
    pairs.emplace_back(RationalSymbol(1.0), blaschke(alpha).tilde());
  Rng rng(8008);
  std::uniform_int_distribution<int> extra(0, 1);
  int built = 0;
  while (built < 5) {
    const auto [a, b] = random_pair(rng, -3, 3);
    const MatchingAnalysis m = analyze(a, b);
    // Multiplying b by t^j moves kappa1 up by j and kappa2 down by j.
    const int j = std::min(-m.kappa1 - 1, m.kappa2 - 1) - extra(rng);
    const RationalSymbol bj = b * RationalSymbol(LaurentPoly::monomial(j));
    if (analyze(a, bj).quadrant != Quadrant::NP) continue;
    pairs.emplace_back(a, bj);
    ++built;
  }
  int disagreements = 0, retries = 0;
  for (const auto& [a, b] : pairs) {
    if (analyze(a, b).quadrant != Quadrant::NP) {
      ++disagreements;
      v.note("pair is not in the mixed quadrant");
      continue;
    }
    for (const Sign s : {Sign::plus, Sign::minus}) {
      const KernelDescription k = kernel_cokernel(a, b, s);
      const OracleRun run = run_oracle(a, b, s, k, kN);
      if (run.n_used > kN) ++retries;
      if (!run.agree) {
        ++disagreements;
        v.note("analytic (" + std::to_string(k.dim_ker) + "," + std::to_string(k.dim_coker) + ") vs oracle (" +
               std::to_string(run.kernel.numeric_kernel_dim) + "," + std::to_string(run.cokernel.numeric_kernel_dim) +
               ")");
      }
    }
  }
  v.check(disagreements == 0, std::to_string(disagreements) + " disagreements");
  v.note(std::to_string(pairs.size()) + " pairs x 2 signs, " + std::to_string(disagreements) + " disagreements, " +
         std::to_string(retries) + " needed a retry");
  return v;
}

Verdict pc_sanity() {
  Verdict v;
  const std::vector<double> ps = {1.2, 1.5, 2.0, 3.0, 6.0};
  bool constants_ok = true;
  for (const cplx ca : {cplx(1.0), cplx(2.0, -1.0), cplx(-3.0)})
    for (const cplx cb : {cplx(0.0), cplx(0.5), cplx(4.0, 4.0)})
      for (const auto& r : pc_p_sweep(PCSymbol::constant(ca), PCSymbol::constant(cb), ps).reports)
        constants_ok = constants_ok && r.is_fredholm;
  v.check(constants_ok, "constant symbols");

  // Jump of size -i r at t = 1 (and back at t = -1), p = 2.
  auto fredholm = [](double r) {
    const PCSymbol b({{0.0, cplx(0.0, -r)}, {std::numbers::pi, 0.0}});
    return pc_fredholm_test(PCSymbol::constant(1.0), b, 2.0).is_fredholm;
  };
  double lo = 0.5, hi = 8.0;
  const bool bracket = fredholm(lo) && !fredholm(hi);
  for (int i = 0; bracket && i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (fredholm(mid) ? lo : hi) = mid;
  }
  const bool flip = bracket && fredholm(lo * (1.0 - 1e-3)) && !fredholm(hi * (1.0 + 1e-3));
  v.check(flip, "verdict flip in the jump family");
  v.check(std::abs(lo - 2.0) <= 1e-6, "critical magnitude " + std::to_string(lo));

  const double nu = std::abs(nu_p(0.0, 2.0) - 0.5);
  const double inf = std::numeric_limits<double>::infinity();
  double h = 0.0;
  for (const double p : ps) h = std::max({h, std::abs(h_p(inf, p)), std::abs(h_p(-inf, p))});
  v.check(nu <= kPcTol && h <= kPcTol, "nu_2(0) and h_p(+-inf)");
  v.note("critical |jump| = " + std::to_string(lo) + " at p = 2, |nu_2(0) - 1/2| = " + sci(nu) +
         ", |h_p(+-inf)| = " + sci(h));
  return v;
}

}  // namespace

int main() {
  const auto symbols = kernel_symbols();
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 signature dichotomy", signature_dichotomy},
      {"2 kernel basis theorem", [&] { return kernel_basis_theorem(symbols); }},
      {"3 involution property", [&] { return involution(symbols); }},
      {"4 worked chain", worked_chain},
      {"5 one-sided invertibility classes", coburn},
      {"6 block decomposition", block_decomposition},
      {"7 shift lemma", shift_lemma},
      {"8 mixed quadrant", mixed_quadrant},
      {"9 piecewise-constant criterion", pc_sanity},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.details.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %s\n", v.pass ? "PASS" : "FAIL", name);
    for (const auto& d : v.details) std::printf("    %s\n", d.c_str());
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
