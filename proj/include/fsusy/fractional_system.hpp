#pragma once

#include <utility>
#include <vector>

#include "fsusy/graded_rep.hpp"
#include "fsusy/linalg.hpp"
#include "fsusy/structure_functions.hpp"
#include "fsusy/verification.hpp"

namespace fsusy {

/// The order-k doublet (H, Q) together with its partner Hamiltonians.
struct FractionalSystem {
  GradedRep rep;
  Matrix q_minus;
  Matrix q_plus;
  Matrix hamiltonian;
  /// H_0..H_k, diagonal and real; H_0 is a copy of H_k.
  std::vector<Matrix> partners;

  int k() const noexcept { return rep.k; }
  /// H_s with s reduced mod k (H_0 == H_k).
  const Matrix& partner(int s) const;
};

/// One ordinary supersymmetric sub-system (h(s), q(s)) with its ladder X(s).
struct Subsystem {
  int s = 2;
  Matrix x_minus;
  Matrix x_plus;
  Matrix q_minus;
  Matrix q_plus;
  Matrix h;
};

/// Q- = X- (1 - Pi_1), Q+ = X+ (1 - Pi_0).
std::pair<Matrix, Matrix> build_supercharges(const GradedRep& rep);

/// Closed-form Hamiltonian
///   (k-1) X+X- - sum_{s=3}^{k} sum_{t=2}^{s-1} (t-1) f_t(N-s+t) Pi_s
///              - sum_{s=1}^{k-1} sum_{t=s}^{k-1} (t-k) f_t(N-s+t) Pi_s.
///
/// f_t(N - s + t) acts on |n> as f_t(n - s + t) when that level exists and as
/// zero otherwise; the only level where this matters is the vacuum.
Matrix build_hamiltonian(const GradedRep& rep, const StructureFunctionSet& f);

/// H_s = (k-1) X+X- - sum_{t=2}^{k-1} (t-1) f_t(N-s+t) + (k-1) sum_{t=s}^{k-1} f_t(N-s+t)
/// for s = 1..k, returned as H_0..H_k with H_0 = H_k.
std::vector<Matrix> partner_hamiltonians(const GradedRep& rep, const StructureFunctionSet& f);

FractionalSystem build_system(const GradedRep& rep, const StructureFunctionSet& f);
FractionalSystem build_system(const StructureFunctionSet& f, std::size_t dim);

/// Graded factorization H_s Pi_s = X(s)+ X(s)-.
///
/// X(s)- acts only on the grade-s sector and carries |n> to the grade-(s-1)
/// sector with amplitude sqrt(H_s(n)): one level down for s = 2..k, k-1 levels
/// up for s = 1 (the wrap from grade 1 to grade 0). Values in [-1e-9, 0) are
/// clipped to zero; anything lower on an interior level throws FactorizationBroken.
std::pair<Matrix, Matrix> factorize_partner(const Matrix& partner, int s, int k, std::size_t interior);

/// q(s)- = X(s)- Pi_s, q(s)+ = X(s)+ Pi_{s-1},
/// h(s) = X(s)- X(s)+ Pi_{s-1} + X(s)+ X(s)- Pi_s. Accepts s = 1..k.
Subsystem build_subsystem(const FractionalSystem& sys, int s);

/// Sub-systems s = 2..k.
std::vector<Subsystem> build_subsystems(const FractionalSystem& sys);

/// Nilpotency, adjointness, commutation with H, the cyclic-sum identity,
/// self-adjointness of H and the partner expansion.
Fragment verify_fractional_relations(const FractionalSystem& sys, double tol = kDefaultTolerance);

/// Ordinary-SUSY relations of one sub-system plus h(s) = H_{s-1} Pi_{s-1} + H_s Pi_s.
Fragment verify_subsystem(const FractionalSystem& sys, const Subsystem& sub, double tol = kDefaultTolerance);

/// H = q(2)- q(2)+ + sum_{s=2}^{k} q(s)+ q(s)-, the intertwining relations and
/// [h(s), q(s)+-] = 0 for every supplied sub-system.
Fragment verify_superposition(const FractionalSystem& sys, const std::vector<Subsystem>& subsystems,
                              double tol = kDefaultTolerance);

/// For k = 2 only: h(1) coincides with the total Hamiltonian. Empty for k > 2.
Fragment verify_ordinary_limit(const FractionalSystem& sys);

}  // namespace fsusy
