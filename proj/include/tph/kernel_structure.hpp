#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tph/hardy.hpp"
#include "tph/matching.hpp"

namespace tph {

enum class Sign { plus, minus };

inline int sign_value(Sign s) noexcept { return s == Sign::plus ? 1 : -1; }
inline Sign opposite(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
const char* to_string(Sign s) noexcept;

/// Bases of im P_g^+ and im P_g^-, P_g^{+-} = (I +- JQgP)/2 on ker T(g).
struct PmBases {
  std::vector<HardyFunction> plus;
  std::vector<HardyFunction> minus;
  int n = 0;  // ind T(g)
  int sigma = 1;

  const std::vector<HardyFunction>& side(Sign s) const { return s == Sign::plus ? plus : minus; }
};

enum class Branch { ThmA_i, ThmA_ii, ThmA_iii, ThmB_mixed_odd, ThmB_mixed_even };
const char* to_string(Branch b) noexcept;

/// Dimensions contributed by im P_c and by the phi image (kernel side).
struct Contributions {
  int from_pc = 0;
  int from_phi = 0;
};

struct KernelDescription {
  Sign sign = Sign::plus;
  std::vector<HardyFunction> kernel_basis;
  std::vector<HardyFunction> cokernel_basis;  // kernel of the adjoint operator
  int dim_ker = 0;
  int dim_coker = 0;
  int index = 0;
  Branch branch = Branch::ThmA_i;
  Contributions contributions;
  Contributions coker_contributions;
  bool bases_independent = true;
};

enum class CoburnClass { MinusHm1, PlusH1, PlusH0, MinusH0, None };
enum class CorollaryCase { IndexOneSigmaOne, IndexMinusOneSigmaOne, IndexZero };
const char* to_string(CoburnClass c) noexcept;
const char* to_string(CorollaryCase c) noexcept;

struct CoburnVerdict {
  CoburnClass class_match = CoburnClass::None;
  bool guaranteed_onesided = false;
  std::optional<CorollaryCase> corollary_case;
};

/// {g_plus^-1 t^j : j < ind T(g)}; empty when ind T(g) <= 0.
std::vector<HardyFunction> toeplitz_kernel_basis(const RationalSymbol& g);

/// Explicit bases of im P_g^{+-} for a matching function g.
PmBases pm_bases(const RationalSymbol& g);

/// (f +- JQgP f)/2. Throws NotInKernel unless T(g) f = 0.
HardyFunction pg_project(const RationalSymbol& g, const HardyFunction& f, Sign side);

/// c_plus^-1 P(c_minus^-1 t^-n f) for c = c_minus t^n c_plus with n <= 0.
HardyFunction right_inverse_apply(const RationalSymbol& c, const HardyFunction& f);

/// Embedding of ker T(d) into ker(T(a) +- H(b)).
HardyFunction phi_map(const RationalSymbol& a, const RationalSymbol& b, const HardyFunction& s,
                      Sign sign);

KernelDescription kernel_cokernel(const RationalSymbol& a, const RationalSymbol& b, Sign sign);

/// (dim ker, dim coker).
std::pair<int, int> defect_numbers(const RationalSymbol& a, const RationalSymbol& b, Sign sign);

CoburnVerdict coburn_classify(const RationalSymbol& a, const RationalSymbol& b, Sign sign);

/// Smallest singular value of the column-normalized Taylor coefficient matrix
/// of the given functions (first `terms` coefficients). 1 for an empty list.
double basis_min_singular_value(const std::vector<HardyFunction>& basis, int terms = 64);

}  // namespace tph
