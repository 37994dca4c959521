#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace tph {

using cplx = std::complex<double>;

/// Piecewise-constant symbol on the circle. Arc i covers angles
/// [start_i, start_{i+1}), the last one wrapping around to start_0 + 2pi.
class PCSymbol {
 public:
  struct Arc {
    double start;
    cplx value;
  };

  /// Throws InvalidSymbol unless there is at least one arc, every start lies in
  /// [0, 2pi), starts increase strictly and all data is finite.
  explicit PCSymbol(std::vector<Arc> arcs);
  static PCSymbol constant(cplx v) { return PCSymbol({{0.0, v}}); }

  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Limit as the angle decreases towards theta (from above), i.e. a(t+0).
  cplx limit_plus(double theta) const;
  /// Limit as the angle increases towards theta (from below), i.e. a(t-0).
  cplx limit_minus(double theta) const;
  /// Angles in [0, 2pi) where the two limits differ.
  std::vector<double> jump_angles() const;
  PCSymbol negated() const;

 private:
  std::size_t arc_index(double theta) const;
  std::vector<Arc> arcs_;
};

/// nu_p(y) = (1 + coth(pi (y + i/p))) / 2, with limits 1 at +inf and 0 at -inf.
cplx nu_p(double y, double p);
/// h_p(y) = 1 / sinh(pi (y + i/p)), vanishing at +-inf.
cplx h_p(double y, double p);

inline constexpr double kPcEpsilon = 1e-9;
inline constexpr int kPcGridSize = 257;

struct PCWitness {
  cplx t;
  double y;  // may be +-inf
  double modulus;
};

struct PCFredholmReport {
  double p = 2.0;
  bool is_fredholm = false;
  double min_matrix_det_modulus = 0.0;
  double min_scalar_modulus = 0.0;
  std::vector<PCWitness> witnesses;  // determinant minimum, then scalar minimum
};

/// Fredholm test for T(a) + H(b) on H^p. The 2x2 determinant is checked at
/// every jump point of a or b in the open upper half-circle (including
/// conjugates of lower jumps) and at one point inside each remaining arc; the
/// scalar symbol is checked at t = +-1. Throws InvalidSymbol for p <= 1,
/// grid_size < 2 or when a takes the value 0 on some arc.
PCFredholmReport pc_fredholm_test(const PCSymbol& a, const PCSymbol& b, double p,
                                  int grid_size = kPcGridSize);

struct PCSweep {
  std::vector<PCFredholmReport> reports;
  /// Adjacent exponents (p_i, p_{i+1}) between which the verdict changes.
  std::vector<std::pair<double, double>> critical_candidates;
};

PCSweep pc_p_sweep(const PCSymbol& a, const PCSymbol& b, const std::vector<double>& p_list,
                   int grid_size = kPcGridSize);

}  // namespace tph
