#include "fsusy/graded_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fsusy/errors.hpp"

namespace fsusy {

namespace {

constexpr Real kProjectorSlack = 1e-9L;

Matrix structure_diagonal(const StructureFunctionSet& f, int s, std::size_t dim) {
  RealVector d(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    d[n] = f(s, static_cast<long>(n));
  }
  return diagonal(d);
}

}  // namespace

int grade_of(long n, int k) { return static_cast<int>(((n % k) + k) % k); }

Scalar root_of_unity(int k) { return std::polar<Real>(1, 2 * std::numbers::pi_v<Real> / static_cast<Real>(k)); }

RealVector build_ladder_profile(const StructureFunctionSet& f, std::size_t dim) {
  if (dim < 1) {
    throw ConfigError("ladder profile needs D >= 1");
  }
  RealVector g(dim + 1, 0);
  for (std::size_t n = 0; n < dim; ++n) {
    g[n + 1] = g[n] + f(grade_of(static_cast<long>(n), f.k()), static_cast<long>(n));
    const std::size_t level = n + 1;
    const bool carries_amplitude = level < dim;
    if (g[level] < -kConstructionTol || (carries_amplitude && g[level] <= kConstructionTol)) {
      throw RepresentationInvalid("ladder profile G(" + std::to_string(level) + ") = " +
                                      std::to_string(static_cast<double>(g[level])) +
                                      " admits no unitary lowering amplitude",
                                  static_cast<long>(level));
    }
  }
  return g;
}

long termination_depth(const StructureFunctionSet& f, long max_levels) {
  Real g = 0;
  for (long n = 0; n < max_levels; ++n) {
    g += f(grade_of(n, f.k()), n);
    if (g <= kConstructionTol) {
      return n + 1;
    }
  }
  return 0;
}

std::vector<Matrix> build_projectors(const Matrix& grading, int k) {
  const Scalar q = root_of_unity(k);
  const auto dim = static_cast<std::size_t>(grading.rows());
  std::vector<Matrix> powers;
  powers.reserve(static_cast<std::size_t>(k));
  powers.push_back(identity(dim));
  for (int t = 1; t < k; ++t) {
    powers.push_back(powers.back() * grading);
  }

  std::vector<Matrix> projectors;
  projectors.reserve(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    Matrix p = zeros(dim);
    for (int t = 0; t < k; ++t) {
      p += std::pow(q, static_cast<Real>(-s * t)) * powers[static_cast<std::size_t>(t)];
    }
    p /= static_cast<Real>(k);

    Matrix clean = zeros(dim);
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      for (Eigen::Index j = 0; j < p.cols(); ++j) {
        const Scalar v = p(i, j);
        const Real target = (i == j && std::abs(v - Scalar(1)) <= kProjectorSlack) ? 1 : 0;
        if (std::abs(v - Scalar(target)) > kProjectorSlack) {
          throw ProjectorDegenerate("projector Pi_" + std::to_string(s) + " has entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") that is neither 0 nor 1",
                                    static_cast<long>(i));
        }
        clean(i, j) = target;
      }
    }
    projectors.push_back(std::move(clean));
  }
  return projectors;
}

std::size_t interior_bound(std::size_t dim, int k) {
  const auto cut = static_cast<std::size_t>(k) + 1;
  return dim > cut ? dim - cut : 0;
}

const Matrix& GradedRep::projector(int s) const { return projectors[static_cast<std::size_t>(grade_of(s, k))]; }

GradedRep build_rep(const StructureFunctionSet& f, std::size_t dim) {
  const int k = f.k();
  if (dim < static_cast<std::size_t>(k)) {
    throw ConfigError("representation dimension D must be >= k");
  }
  // Hamiltonian terms evaluate f_t up to level D + k - 2.
  if (!f.covers(static_cast<long>(dim) + k)) {
    throw ConfigError("structure-function table does not cover levels 0.." + std::to_string(dim + k - 1) +
                      " for every grade");
  }

  GradedRep rep;
  rep.k = k;
  rep.dim = dim;
  rep.q = root_of_unity(k);
  rep.ladder = build_ladder_profile(f, dim);
  rep.interior = interior_bound(dim, k);

  rep.x_minus = zeros(dim);
  RealVector levels(dim);
  rep.grading = zeros(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    levels[n] = static_cast<Real>(n);
    rep.grading(i, i) = std::pow(rep.q, static_cast<Real>(grade_of(static_cast<long>(n), k)));
    if (n >= 1) {
      rep.x_minus(i - 1, i) = std::sqrt(std::max<Real>(rep.ladder[n], 0));
    }
  }
  rep.x_plus = dagger(rep.x_minus);
  rep.number = diagonal(levels);
  rep.projectors = build_projectors(rep.grading, k);
  return rep;
}

Fragment verify_wk_relations(const GradedRep& rep, const StructureFunctionSet& f, double tol) {
  const std::size_t dim = rep.dim;
  const Matrix one = identity(dim);

  Matrix structure = zeros(dim);
  for (int s = 0; s < rep.k; ++s) {
    structure += structure_diagonal(f, s, dim) * rep.projector(s);
  }

  const Matrix& xm = rep.x_minus;
  const Matrix& xp = rep.x_plus;
  const Matrix& n = rep.number;
  const Matrix& kk = rep.grading;

  Fragment out;
  out.push_back(make_record("wk.ladder_commutator", "[X-, X+] = sum_s f_s(N) Pi_s",
                            max_abs_leading(commutator(xm, xp) - structure, rep.interior), tol, Subspace::Interior));
  out.push_back(make_record("wk.number_shift", "[N, X-] = -X-, [N, X+] = X+",
                            std::max(max_abs(commutator(n, xm) + xm), max_abs(commutator(n, xp) - xp)), tol,
                            Subspace::Full));
  out.push_back(make_record("wk.grading_q_commutator", "K X+ - q X+ K = 0, X- K - q K X- = 0",
                            std::max(max_abs(kk * xp - rep.q * xp * kk), max_abs(xm * kk - rep.q * kk * xm)), tol,
                            Subspace::Full));
  out.push_back(make_record("wk.grading_number", "[K, N] = 0", max_abs(commutator(kk, n)), tol, Subspace::Full));
  out.push_back(make_record("wk.grading_order", "K^k = 1", max_abs(power(kk, rep.k) - one), tol, Subspace::Full));
  out.push_back(make_record("wk.shift_adjoint", "X+ = X-^dagger", max_abs(xp - dagger(xm)),
                            static_cast<double>(kConstructionTol), Subspace::Full));
  return out;
}

}  // namespace fsusy
