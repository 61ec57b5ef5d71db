#include "fsusy/fractional_system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fsusy/errors.hpp"

namespace fsusy {

namespace {

constexpr Real kFactorizationSlack = 1e-9L;

// f_t(N + shift) as a diagonal matrix; levels below zero contribute nothing.
Matrix shifted_structure(const StructureFunctionSet& f, int t, long shift, std::size_t dim) {
  RealVector d(dim, 0);
  for (std::size_t n = 0; n < dim; ++n) {
    const long level = static_cast<long>(n) + shift;
    d[n] = level < 0 ? Real(0) : f(t, level);
  }
  return diagonal(d);
}

// Level offset of the sub-system ladder X(s)-: grade s -> grade s-1.
long ladder_step(int s, int k) { return s == 1 ? k - 1 : -1; }

void check_label(int s, int k) {
  if (s < 1 || s > k) {
    throw ConfigError("sub-system label s=" + std::to_string(s) + " outside 1.." + std::to_string(k));
  }
}

std::string suffix(int s) { return "[s=" + std::to_string(s) + "]"; }

}  // namespace

const Matrix& FractionalSystem::partner(int s) const {
  const int reduced = grade_of(s, rep.k);
  return partners[static_cast<std::size_t>(reduced == 0 ? rep.k : reduced)];
}

std::pair<Matrix, Matrix> build_supercharges(const GradedRep& rep) {
  const Matrix one = identity(rep.dim);
  Matrix qm = rep.x_minus * (one - rep.projector(1));
  Matrix qp = rep.x_plus * (one - rep.projector(0));
  return {std::move(qm), std::move(qp)};
}

Matrix build_hamiltonian(const GradedRep& rep, const StructureFunctionSet& f) {
  const int k = rep.k;
  const std::size_t dim = rep.dim;
  Matrix h = static_cast<Real>(k - 1) * rep.x_plus * rep.x_minus;
  for (int s = 3; s <= k; ++s) {
    for (int t = 2; t <= s - 1; ++t) {
      h -= static_cast<Real>(t - 1) * shifted_structure(f, t, t - s, dim) * rep.projector(s);
    }
  }
  for (int s = 1; s <= k - 1; ++s) {
    for (int t = s; t <= k - 1; ++t) {
      h -= static_cast<Real>(t - k) * shifted_structure(f, t, t - s, dim) * rep.projector(s);
    }
  }
  return h;
}

std::vector<Matrix> partner_hamiltonians(const GradedRep& rep, const StructureFunctionSet& f) {
  const int k = rep.k;
  const std::size_t dim = rep.dim;
  const Matrix ladder = static_cast<Real>(k - 1) * rep.x_plus * rep.x_minus;
  std::vector<Matrix> partners(static_cast<std::size_t>(k) + 1);
  for (int s = 1; s <= k; ++s) {
    Matrix hs = ladder;
    for (int t = 2; t <= k - 1; ++t) {
      hs -= static_cast<Real>(t - 1) * shifted_structure(f, t, t - s, dim);
    }
    for (int t = s; t <= k - 1; ++t) {
      hs += static_cast<Real>(k - 1) * shifted_structure(f, t, t - s, dim);
    }
    partners[static_cast<std::size_t>(s)] = std::move(hs);
  }
  partners[0] = partners[static_cast<std::size_t>(k)];
  return partners;
}

FractionalSystem build_system(const GradedRep& rep, const StructureFunctionSet& f) {
  FractionalSystem sys;
  sys.rep = rep;
  std::tie(sys.q_minus, sys.q_plus) = build_supercharges(rep);
  sys.hamiltonian = build_hamiltonian(rep, f);
  sys.partners = partner_hamiltonians(rep, f);
  return sys;
}

FractionalSystem build_system(const StructureFunctionSet& f, std::size_t dim) {
  return build_system(build_rep(f, dim), f);
}

std::pair<Matrix, Matrix> factorize_partner(const Matrix& partner, int s, int k, std::size_t interior) {
  check_label(s, k);
  const auto dim = static_cast<long>(partner.rows());
  const long step = ladder_step(s, k);
  Matrix xm = zeros(static_cast<std::size_t>(dim));
  for (long n = 0; n < dim; ++n) {
    if (grade_of(n, k) != grade_of(s, k)) {
      continue;
    }
    const long target = n + step;
    if (target < 0 || target >= dim) {
      continue;
    }
    const Real value = partner(n, n).real();
    if (value < -kFactorizationSlack && static_cast<std::size_t>(n) < interior) {
      throw FactorizationBroken("partner H_" + std::to_string(s) + " is negative (" +
                                    std::to_string(static_cast<double>(value)) + ") at level " + std::to_string(n),
                                s, n);
    }
    xm(target, n) = std::sqrt(std::max<Real>(value, 0));
  }
  Matrix xp = dagger(xm);
  return {std::move(xm), std::move(xp)};
}

Subsystem build_subsystem(const FractionalSystem& sys, int s) {
  const int k = sys.k();
  check_label(s, k);
  Subsystem sub;
  sub.s = s;
  std::tie(sub.x_minus, sub.x_plus) = factorize_partner(sys.partner(s), s, k, sys.rep.interior);
  const Matrix& lower = sys.rep.projector(s - 1);
  const Matrix& upper = sys.rep.projector(s);
  sub.q_minus = sub.x_minus * upper;
  sub.q_plus = sub.x_plus * lower;
  sub.h = sub.x_minus * sub.x_plus * lower + sub.x_plus * sub.x_minus * upper;
  return sub;
}

std::vector<Subsystem> build_subsystems(const FractionalSystem& sys) {
  std::vector<Subsystem> out;
  for (int s = 2; s <= sys.k(); ++s) {
    out.push_back(build_subsystem(sys, s));
  }
  return out;
}

Fragment verify_fractional_relations(const FractionalSystem& sys, double tol) {
  const int k = sys.k();
  const std::size_t interior = sys.rep.interior;
  const Matrix& qm = sys.q_minus;
  const Matrix& qp = sys.q_plus;
  const Matrix& h = sys.hamiltonian;
  const auto construction = static_cast<double>(kConstructionTol);

  Fragment out;
  out.push_back(make_record("frac.nilpotency_minus", "Q-^k = 0", max_abs(power(qm, k)), tol, Subspace::Full));
  out.push_back(make_record("frac.nilpotency_plus", "Q+^k = 0", max_abs(power(qp, k)), tol, Subspace::Full));
  if (sys.rep.dim > static_cast<std::size_t>(k)) {
    out.push_back(make_record("frac.nilpotency_order", "Q-^(k-1) != 0", max_abs(power(qm, k - 1)), 1e-6,
                              Subspace::Full, Bound::Above));
  }
  out.push_back(
      make_record("frac.supercharge_adjoint", "Q+ = Q-^dagger", max_abs(qp - dagger(qm)), construction, Subspace::Full));

  Matrix cyclic_sum = zeros(sys.rep.dim);
  for (int j = 0; j <= k - 1; ++j) {
    cyclic_sum += power(qm, k - 1 - j) * qp * power(qm, j);
  }
  out.push_back(make_record("frac.cyclic_sum", "sum_{j=0}^{k-1} Q-^(k-1-j) Q+ Q-^j = Q-^(k-2) H",
                            max_abs_leading(cyclic_sum - power(qm, k - 2) * h, interior), tol, Subspace::Interior));
  out.push_back(make_record("frac.conserved_minus", "[H, Q-] = 0", max_abs_leading(commutator(h, qm), interior), tol,
                            Subspace::Interior));
  out.push_back(make_record("frac.conserved_plus", "[H, Q+] = 0", max_abs_leading(commutator(h, qp), interior), tol,
                            Subspace::Interior));
  out.push_back(make_record("frac.hermitian", "H = H^dagger", max_abs(h - dagger(h)), construction, Subspace::Full));

  Matrix expansion = zeros(sys.rep.dim);
  for (int s = 1; s <= k; ++s) {
    expansion += sys.partner(s) * sys.rep.projector(s);
  }
  out.push_back(make_record("frac.partner_expansion", "H = sum_{s=1}^{k} H_s Pi_s", max_abs(h - expansion),
                            construction, Subspace::Full));
  return out;
}

Fragment verify_subsystem(const FractionalSystem& sys, const Subsystem& sub, double tol) {
  const int k = sys.k();
  const int s = sub.s;
  const std::size_t interior = sys.rep.interior;
  const auto dim = static_cast<long>(sys.rep.dim);
  const Matrix& hs = sys.partner(s);
  const Matrix& lower = sys.rep.projector(s - 1);
  const Matrix& upper = sys.rep.projector(s);
  const auto construction = static_cast<double>(kConstructionTol);

  // H_s read one ladder step back from the grade-(s-1) side.
  const long step = ladder_step(s, k);
  RealVector shifted(static_cast<std::size_t>(dim), 0);
  for (long m = 0; m < dim; ++m) {
    const long source = m - step;
    if (source >= 0 && source < dim) {
      shifted[static_cast<std::size_t>(m)] = hs(source, source).real();
    }
  }
  const std::string shifted_name = s == 1 ? "H_1(N-k+1)" : "H_s(N+1)";

  Fragment out;
  out.push_back(make_record("sub.factorization" + suffix(s), "H_s Pi_s = X(s)+ X(s)-",
                            max_abs_leading((sub.x_plus * sub.x_minus - hs) * upper, interior), tol,
                            Subspace::Interior));
  out.push_back(make_record("sub.reverse_factorization" + suffix(s), "X(s)- X(s)+ = " + shifted_name + " Pi_{s-1}",
                            max_abs_leading(sub.x_minus * sub.x_plus - diagonal(shifted) * lower, interior), tol,
                            Subspace::Interior));
  out.push_back(make_record("sub.nilpotency" + suffix(s), "q(s)-^2 = q(s)+^2 = 0",
                            std::max(max_abs(sub.q_minus * sub.q_minus), max_abs(sub.q_plus * sub.q_plus)),
                            construction, Subspace::Full));
  out.push_back(make_record("sub.adjoint" + suffix(s), "q(s)+ = q(s)-^dagger", max_abs(sub.q_plus - dagger(sub.q_minus)),
                            construction, Subspace::Full));
  out.push_back(make_record("sub.hermitian" + suffix(s), "h(s) = h(s)^dagger", max_abs(sub.h - dagger(sub.h)),
                            construction, Subspace::Full));
  out.push_back(make_record("sub.anticommutator" + suffix(s), "h(s) = {q(s)-, q(s)+}",
                            max_abs_leading(sub.h - anticommutator(sub.q_minus, sub.q_plus), interior), tol,
                            Subspace::Interior));
  out.push_back(make_record("sub.partner_sum" + suffix(s), "h(s) = H_{s-1} Pi_{s-1} + H_s Pi_s",
                            max_abs_leading(sub.h - (sys.partner(s - 1) * lower + hs * upper), interior), tol,
                            Subspace::Interior));
  return out;
}

Fragment verify_superposition(const FractionalSystem& sys, const std::vector<Subsystem>& subsystems, double tol) {
  const std::size_t interior = sys.rep.interior;
  Fragment out;

  const auto second = std::find_if(subsystems.begin(), subsystems.end(), [](const Subsystem& x) { return x.s == 2; });
  if (second != subsystems.end()) {
    Matrix total = second->q_minus * second->q_plus;
    for (const auto& sub : subsystems) {
      if (sub.s >= 2) {
        total += sub.q_plus * sub.q_minus;
      }
    }
    out.push_back(make_record("sup.superposition", "H = q(2)- q(2)+ + sum_{s=2}^{k} q(s)+ q(s)-",
                              max_abs_leading(sys.hamiltonian - total, interior), tol, Subspace::Interior));
  }

  for (const auto& sub : subsystems) {
    const int s = sub.s;
    const Matrix& lower = sys.partner(s - 1);
    const Matrix& upper = sys.partner(s);
    out.push_back(make_record("sup.intertwining_lower" + suffix(s), "H_{s-1} X(s)- = X(s)- H_s",
                              max_abs_leading(lower * sub.x_minus - sub.x_minus * upper, interior), tol,
                              Subspace::Interior));
    out.push_back(make_record("sup.intertwining_raise" + suffix(s), "H_s X(s)+ = X(s)+ H_{s-1}",
                              max_abs_leading(upper * sub.x_plus - sub.x_plus * lower, interior), tol,
                              Subspace::Interior));
    out.push_back(make_record("sup.conserved" + suffix(s), "[h(s), q(s)-] = [h(s), q(s)+] = 0",
                              std::max(max_abs_leading(commutator(sub.h, sub.q_minus), interior),
                                       max_abs_leading(commutator(sub.h, sub.q_plus), interior)),
                              tol, Subspace::Interior));
  }
  return out;
}

Fragment verify_ordinary_limit(const FractionalSystem& sys) {
  if (sys.k() != 2) {
    return {};
  }
  const Subsystem first = build_subsystem(sys, 1);
  return {make_record("k2.h1_is_total", "h(1) = H for k = 2",
                      max_abs_leading(first.h - sys.hamiltonian, sys.rep.interior),
                      static_cast<double>(kConstructionTol), Subspace::Interior)};
}

}  // namespace fsusy
