#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fsusy/linalg.hpp"

namespace fsusy {

/// f_s(n) = a n + b for every grade s.
struct Affine {
  Real a = 0;
  Real b = 0;
};

/// f_s(n) = c_s, one constant per grade.
struct Cyclic {
  std::vector<Real> constants;
};

/// Tabulated values keyed by (grade, level).
struct Table {
  std::map<std::pair<int, long>, Real> values;
};

using Family = std::variant<Affine, Cyclic, Table>;

/// The k structure functions {f_s} that fix one algebra W_k.
///
/// Values are real for every argument, so each f_s(N) is self-adjoint.
class StructureFunctionSet {
 public:
  static StructureFunctionSet affine(int k, Real a, Real b);
  static StructureFunctionSet cyclic(std::vector<Real> constants);
  static StructureFunctionSet table(int k, std::map<std::pair<int, long>, Real> values);

  int k() const noexcept { return k_; }
  const Family& family() const noexcept { return family_; }

  /// f_s(n), with s reduced mod k. Throws ConfigError when a table has no entry.
  Real operator()(int s, long n) const;

  /// True when a table provides f_s(n) for every grade s and 0 <= n < levels.
  /// Analytic families always cover.
  bool covers(long levels) const;

  /// Coefficients (a, b) when every f_s is the same affine function of n.
  /// Cyclic families with equal constants and tables that fit one line qualify.
  std::optional<Affine> as_affine() const;

  std::string describe() const;

 private:
  StructureFunctionSet(int k, Family family) : k_(k), family_(std::move(family)) {}

  int k_;
  Family family_;
};

/// Reads a table file: header `s,n,value`, one row per (grade, level).
StructureFunctionSet load_table(std::istream& in, int k);
StructureFunctionSet load_table(const std::filesystem::path& path, int k);

}  // namespace fsusy
