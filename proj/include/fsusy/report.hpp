#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsusy/graded_rep.hpp"
#include "fsusy/spectra.hpp"
#include "fsusy/structure_functions.hpp"
#include "fsusy/verification.hpp"

namespace fsusy {

enum class FamilyKind { Affine, Cyclic, Table };

struct RunConfig {
  int k = 2;
  std::size_t dim = 0;
  FamilyKind family = FamilyKind::Affine;
  std::vector<double> params;  ///< (a, b) for affine, c_0..c_{k-1} for cyclic
  std::string table_path;
  double tolerance = kDefaultTolerance;
  std::string out_path;  ///< empty: standard output
  std::string format = "json";
  /// Shrink D to the su(2) termination depth instead of failing (used by scans).
  bool clamp_to_termination = false;

  bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError unless k >= 2, D >= k + 2, tolerance > 0 and the
/// family parameters have the right arity.
void validate(const RunConfig& config);

StructureFunctionSet make_structure_functions(const RunConfig& config);

struct ReportError {
  std::string kind;
  std::string message;
  long level = -1;

  bool operator==(const ReportError&) const = default;
};

struct LevelRow {
  int partner = 0;  ///< 0 marks the total Hamiltonian
  long n = 0;
  double value = 0;

  bool operator==(const LevelRow&) const = default;
};

struct DegeneracyRow {
  double value = 0;
  int multiplicity = 0;

  bool operator==(const DegeneracyRow&) const = default;
};

struct PairingRow {
  std::size_t matched = 0;
  std::vector<std::pair<int, long>> unmatched;
  std::vector<std::pair<int, long>> zero_modes;

  bool operator==(const PairingRow&) const = default;
};

struct ClassRow {
  std::string tag = "generic";
  std::string potential;
  std::string family;
  std::optional<std::pair<double, double>> affine;
  std::optional<long> termination_depth;

  bool operator==(const ClassRow&) const = default;
};

struct VerificationReport {
  RunConfig config;
  std::size_t effective_dim = 0;
  std::vector<Record> records;
  std::vector<LevelRow> levels;
  std::vector<DegeneracyRow> degeneracies;
  PairingRow pairing;
  ClassRow classification;
  std::vector<std::string> notes;
  std::optional<ReportError> error;
  bool overall_pass = false;
  double wall_time_s = 0;

  bool operator==(const VerificationReport&) const = default;
};

/// Full pipeline: representation, fractional system, sub-systems, all
/// verifications, spectrum and classification. Construction failures are
/// captured in `error`; malformed configurations throw ConfigError.
VerificationReport run_verify(const RunConfig& config);

/// 0 when every identity passes, 1 on an identity failure, 2 on a construction error.
int exit_status(const VerificationReport& report);

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const Record& r);
void from_json(const nlohmann::json& j, Record& r);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// CSV with header `partner_s,level_n,eigenvalue`. Partner rows first
/// (s = 1..k), then the total Hamiltonian with partner_s = `total`.
void write_spectrum_csv(std::ostream& out, const VerificationReport& report);

/// Sub-system operator data for one label s.
struct SubsystemData {
  int s = 2;
  std::vector<double> lower_partner;  ///< diagonal of H_{s-1}
  std::vector<double> upper_partner;  ///< diagonal of H_s
  std::vector<std::tuple<long, long, double>> x_minus;  ///< nonzero entries (row, col, value)
  std::vector<double> h_diagonal;
  std::vector<Record> records;
};

struct Decomposition {
  RunConfig config;
  std::vector<SubsystemData> subsystems;
  std::optional<ReportError> error;
};

Decomposition run_decompose(const RunConfig& config);
nlohmann::json to_json(const Decomposition& d);
void write_decomposition_csv(std::ostream& out, const Decomposition& d);

struct ScanPoint {
  double a = 0;
  double b = 0;
  VerificationReport report;
};

/// Runs the pipeline at every grid point (concurrently), auto-clamping su(2)
/// points to their termination depth.
std::vector<ScanPoint> run_scan(const RunConfig& base, const std::vector<std::pair<double, double>>& grid);
nlohmann::json scan_to_json(const std::vector<ScanPoint>& points);
int scan_exit_status(const std::vector<ScanPoint>& points);

/// Parses "a,b;a,b;..." into grid points. Throws ConfigError.
std::vector<std::pair<double, double>> parse_grid(const std::string& text);

}  // namespace fsusy
