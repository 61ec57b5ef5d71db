#pragma once

#include <cstddef>
#include <vector>

#include "fsusy/linalg.hpp"
#include "fsusy/structure_functions.hpp"
#include "fsusy/verification.hpp"

namespace fsusy {

inline constexpr Real kConstructionTol = 1e-12L;
inline constexpr double kDefaultTolerance = 1e-10;

/// Grade of basis state |n>: the unique s with Pi_s|n> = |n>.
///
/// The grading operator acts as K|n> = q^n |n>, so Pi_s selects n = s (mod k).
int grade_of(long n, int k);

/// Primitive k-th root of unity exp(2 pi i / k).
Scalar root_of_unity(int k);

/// Diagonal of X+ X- on |0>..|D>: G(0) = 0, G(n+1) = G(n) + f_{grade(n)}(n).
///
/// Throws RepresentationInvalid at the first level n >= 1 where the ladder
/// breaks: G(n) < -1e-12 anywhere in 1..D, or G(n) <= 1e-12 on a level
/// 1..D-1 that still has to carry a lowering amplitude.
RealVector build_ladder_profile(const StructureFunctionSet& f, std::size_t dim);

/// First level n >= 1 at which the unrolled ladder profile stops being
/// positive, or 0 if none appears within `max_levels`.
long termination_depth(const StructureFunctionSet& f, long max_levels = 1L << 20);

/// Pi_s = (1/k) sum_t q^{-st} K^t for s = 0..k-1, cleaned to exact 0/1 diagonals.
/// Throws ProjectorDegenerate when an entry is not within 1e-9 of 0 or 1.
std::vector<Matrix> build_projectors(const Matrix& grading, int k);

/// Truncated Z_k-graded Fock representation of W_k on |0>..|D-1>.
struct GradedRep {
  int k = 2;
  std::size_t dim = 0;
  Scalar q;
  Matrix x_minus;
  Matrix x_plus;
  Matrix number;
  Matrix grading;
  std::vector<Matrix> projectors;
  RealVector ladder;  ///< G(0..D)
  std::size_t interior = 0;  ///< identity checks use levels n < interior

  /// Pi_s with s reduced mod k.
  const Matrix& projector(int s) const;
};

/// Requires D >= k. Propagates RepresentationInvalid and (for tables) ConfigError.
GradedRep build_rep(const StructureFunctionSet& f, std::size_t dim);

/// interior = D - k - 1, clamped at 0.
std::size_t interior_bound(std::size_t dim, int k);

/// Residuals of the W_k defining relations.
///
/// The ladder commutator is checked on the interior only; the truncation
/// edge violates it by construction. All other relations hold on the full space.
Fragment verify_wk_relations(const GradedRep& rep, const StructureFunctionSet& f, double tol = kDefaultTolerance);

}  // namespace fsusy
