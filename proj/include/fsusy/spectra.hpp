#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsusy/fractional_system.hpp"
#include "fsusy/graded_rep.hpp"
#include "fsusy/structure_functions.hpp"
#include "fsusy/verification.hpp"

namespace fsusy {

struct Level {
  long n = 0;
  Real value = 0;
};

struct PartnerSpectrum {
  int s = 1;
  std::vector<Level> levels;  ///< interior levels in ascending n
};

struct Degeneracy {
  Real value = 0;
  int multiplicity = 0;
};

/// Interior eigenvalues of H and of every partner H_1..H_k. All operators are
/// diagonal, so eigenvalues are diagonal reads.
struct SpectrumTable {
  int k = 2;
  std::vector<Level> total;
  std::vector<PartnerSpectrum> partners;
  std::vector<Degeneracy> degeneracies;  ///< of H, ascending in value

  const PartnerSpectrum& partner(int s) const;
};

SpectrumTable spectrum(const FractionalSystem& sys);

struct PairingTolerance {
  double zero_mode = 1e-10;  ///< levels at or below this carry no partner
  double match = 1e-9;
};

struct PairingSummary {
  std::size_t matched = 0;
  std::vector<std::pair<int, long>> unmatched;   ///< (s, n) with no equal level in H_{s-1}
  std::vector<std::pair<int, long>> zero_modes;  ///< (s, n) exempt from pairing
  Real max_mismatch = 0;                          ///< over matched pairs
  Fragment records;

  bool pass() const { return unmatched.empty(); }
};

/// Level-resolved isospectrality: for s = 2..k and every interior level n >= 1
/// of grade s with H_s(n) above the zero-mode threshold, H_{s-1}(n-1) = H_s(n).
///
/// Pairing is taken on the grade-s sector, where X(s)- carries eigenstates of
/// H_s onto eigenstates of H_{s-1}.
PairingSummary isospectral_check(const SpectrumTable& table, const FractionalSystem& sys, PairingTolerance tol = {});

enum class AlgebraTag { WeylHeisenberg, Su2, Su11, Generic };

struct AlgebraClass {
  AlgebraTag tag = AlgebraTag::Generic;
  std::optional<Affine> params;  ///< (a, b) when the family reduces to one affine function
  std::string potential;         ///< named potential, empty if none
  std::string family;            ///< "translational shape-invariant", "cyclic shape-invariant" or empty

  bool operator==(const AlgebraClass& other) const;
};

AlgebraClass classify(const StructureFunctionSet& f);

const char* to_string(AlgebraTag tag);

struct ClosureSummary {
  Fragment records;
  std::optional<long> termination_depth;  ///< su(2) only
};

/// On the interior, [X-, X+] = a N + b. For su(2) additionally checks that the
/// ladder terminates and that RepresentationInvalid fires exactly there.
ClosureSummary closure_check(const GradedRep& rep, const AlgebraClass& cls, double tol = kDefaultTolerance);

}  // namespace fsusy
