#include "fsusy/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fsusy/errors.hpp"

namespace fsusy {

namespace {

// Eigenvalues closer than this are counted as one degenerate level.
constexpr Real kDegeneracySlack = 1e-9L;

std::vector<Level> interior_levels(const Matrix& m, std::size_t interior) {
  std::vector<Level> levels;
  levels.reserve(interior);
  for (std::size_t n = 0; n < interior; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    levels.push_back({static_cast<long>(n), m(i, i).real()});
  }
  return levels;
}

}  // namespace

const PartnerSpectrum& SpectrumTable::partner(int s) const {
  const int reduced = grade_of(s, k);
  const int label = reduced == 0 ? k : reduced;
  return partners.at(static_cast<std::size_t>(label - 1));
}

SpectrumTable spectrum(const FractionalSystem& sys) {
  SpectrumTable table;
  table.k = sys.k();
  const std::size_t interior = sys.rep.interior;
  table.total = interior_levels(sys.hamiltonian, interior);
  for (int s = 1; s <= sys.k(); ++s) {
    table.partners.push_back({s, interior_levels(sys.partner(s), interior)});
  }

  std::vector<Real> values;
  for (const auto& level : table.total) {
    values.push_back(level.value);
  }
  std::sort(values.begin(), values.end());
  for (Real v : values) {
    if (!table.degeneracies.empty() && std::abs(table.degeneracies.back().value - v) <= kDegeneracySlack) {
      ++table.degeneracies.back().multiplicity;
    } else {
      table.degeneracies.push_back({v, 1});
    }
  }
  return table;
}

PairingSummary isospectral_check(const SpectrumTable& table, const FractionalSystem& sys, PairingTolerance tol) {
  const int k = sys.k();
  PairingSummary out;
  for (int s = 2; s <= k; ++s) {
    const auto& upper = table.partner(s).levels;
    const auto& lower = table.partner(s - 1).levels;
    for (std::size_t i = 1; i < upper.size(); ++i) {
      const long n = upper[i].n;
      if (grade_of(n, k) != grade_of(s, k)) {
        continue;
      }
      if (upper[i].value <= tol.zero_mode) {
        out.zero_modes.emplace_back(s, n);
        continue;
      }
      const Real mismatch = std::abs(lower[i - 1].value - upper[i].value);
      if (mismatch < tol.match) {
        ++out.matched;
        out.max_mismatch = std::max(out.max_mismatch, mismatch);
      } else {
        out.unmatched.emplace_back(s, n);
      }
    }
  }
  out.records.push_back(make_record("spec.pairing_mismatch", "H_{s-1}(n-1) = H_s(n) on grade-s levels",
                                    out.max_mismatch, tol.match, Subspace::Interior));
  out.records.push_back(make_record("spec.unmatched_levels", "every positive grade-s level of H_s has a partner",
                                    static_cast<Real>(out.unmatched.size()), 0.5, Subspace::Interior));
  return out;
}

bool AlgebraClass::operator==(const AlgebraClass& other) const {
  const bool same_params = params.has_value() == other.params.has_value() &&
                           (!params || (params->a == other.params->a && params->b == other.params->b));
  return tag == other.tag && same_params && potential == other.potential && family == other.family;
}

AlgebraClass classify(const StructureFunctionSet& f) {
  AlgebraClass cls;
  if (std::holds_alternative<Cyclic>(f.family())) {
    cls.family = "cyclic shape-invariant";
  }
  cls.params = f.as_affine();
  if (!cls.params) {
    return cls;
  }
  if (!std::holds_alternative<Cyclic>(f.family())) {
    cls.family = "translational shape-invariant";
  }
  const Real a = cls.params->a;
  const Real b = cls.params->b;
  if (a == 0 && b != 0) {
    cls.tag = AlgebraTag::WeylHeisenberg;
    if (b > 0) {
      cls.potential = "harmonic oscillator";
    }
  } else if (a < 0 && b > 0) {
    cls.tag = AlgebraTag::Su2;
    cls.potential = "Morse";
  } else if (a > 0 && b > 0) {
    cls.tag = AlgebraTag::Su11;
    cls.potential = "Poschl-Teller";
  }
  return cls;
}

const char* to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::WeylHeisenberg:
      return "WeylHeisenberg";
    case AlgebraTag::Su2:
      return "su2";
    case AlgebraTag::Su11:
      return "su11";
    case AlgebraTag::Generic:
      return "generic";
  }
  return "generic";
}

ClosureSummary closure_check(const GradedRep& rep, const AlgebraClass& cls, double tol) {
  ClosureSummary out;
  if (!cls.params) {
    return out;
  }
  const Real a = cls.params->a;
  const Real b = cls.params->b;
  const Matrix expected = a * rep.number + b * identity(rep.dim);
  out.records.push_back(make_record("closure.affine_commutator", "[X-, X+] = a N + b",
                                    max_abs_leading(commutator(rep.x_minus, rep.x_plus) - expected, rep.interior), tol,
                                    Subspace::Interior));

  if (cls.tag == AlgebraTag::Su2) {
    const auto f = StructureFunctionSet::affine(rep.k, a, b);
    const long depth = termination_depth(f);
    out.termination_depth = depth;
    // The ladder must break exactly at the unrolled termination level.
    long thrown_at = -1;
    try {
      build_ladder_profile(f, static_cast<std::size_t>(depth) + 1);
    } catch (const RepresentationInvalid& e) {
      thrown_at = e.level();
    }
    const Real offset = depth > 0 && thrown_at >= 0 ? std::abs(static_cast<Real>(thrown_at - depth)) : Real(1);
    out.records.push_back(make_record("closure.su2_termination",
                                      "ladder terminates; RepresentationInvalid at the first G(n) <= 0", offset, 0.5,
                                      Subspace::Full));
  }
  return out;
}

}  // namespace fsusy
