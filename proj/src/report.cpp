#include "fsusy/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

#include "fsusy/errors.hpp"
#include "fsusy/fractional_system.hpp"

namespace fsusy {

using nlohmann::json;

namespace {

const char* family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Affine:
      return "affine";
    case FamilyKind::Cyclic:
      return "cyclic";
    case FamilyKind::Table:
      return "table";
  }
  return "affine";
}

FamilyKind parse_family(const std::string& name) {
  if (name == "affine") return FamilyKind::Affine;
  if (name == "cyclic") return FamilyKind::Cyclic;
  if (name == "table") return FamilyKind::Table;
  throw ConfigError("unknown family '" + name + "'");
}

ReportError to_error(const ConstructionError& e) { return {e.kind(), e.what(), e.level()}; }

ClassRow to_row(const AlgebraClass& cls) {
  ClassRow row;
  row.tag = to_string(cls.tag);
  row.potential = cls.potential;
  row.family = cls.family;
  if (cls.params) {
    row.affine = std::make_pair(static_cast<double>(cls.params->a), static_cast<double>(cls.params->b));
  }
  return row;
}

std::vector<double> real_diagonal_double(const Matrix& m) {
  std::vector<double> out;
  for (Real v : real_diagonal(m)) {
    out.push_back(static_cast<double>(v));
  }
  return out;
}

json error_json(const std::optional<ReportError>& error) {
  if (!error) return nullptr;
  return json{{"kind", error->kind}, {"message", error->message}, {"level", error->level}};
}

std::optional<ReportError> error_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return ReportError{j.at("kind").get<std::string>(), j.at("message").get<std::string>(), j.at("level").get<long>()};
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.k < 2) {
    throw ConfigError("k must be >= 2 (got " + std::to_string(config.k) + ")");
  }
  if (config.dim < static_cast<std::size_t>(config.k) + 2) {
    throw ConfigError("D must be >= k + 2 so the interior is nonempty (got D=" + std::to_string(config.dim) +
                      ", k=" + std::to_string(config.k) + ")");
  }
  if (!(config.tolerance > 0) || !std::isfinite(config.tolerance)) {
    throw ConfigError("tolerance must be a positive finite number");
  }
  switch (config.family) {
    case FamilyKind::Affine:
      if (config.params.size() != 2) throw ConfigError("affine family needs exactly two parameters a b");
      break;
    case FamilyKind::Cyclic:
      if (config.params.size() != static_cast<std::size_t>(config.k)) {
        throw ConfigError("cyclic family needs exactly k=" + std::to_string(config.k) + " constants (got " +
                          std::to_string(config.params.size()) + ")");
      }
      break;
    case FamilyKind::Table:
      if (config.table_path.empty()) throw ConfigError("table family needs a file path");
      break;
  }
  for (double p : config.params) {
    if (!std::isfinite(p)) throw ConfigError("family parameters must be finite");
  }
  if (config.format != "json" && config.format != "csv") {
    throw ConfigError("format must be json or csv");
  }
}

StructureFunctionSet make_structure_functions(const RunConfig& config) {
  switch (config.family) {
    case FamilyKind::Affine:
      return StructureFunctionSet::affine(config.k, config.params.at(0), config.params.at(1));
    case FamilyKind::Cyclic:
      return StructureFunctionSet::cyclic(std::vector<Real>(config.params.begin(), config.params.end()));
    case FamilyKind::Table:
      return load_table(std::filesystem::path(config.table_path), config.k);
  }
  throw ConfigError("unknown family");
}

VerificationReport run_verify(const RunConfig& config) {
  validate(config);
  const auto f = make_structure_functions(config);
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.config = config;
  report.effective_dim = config.dim;
  const double tol = config.tolerance;

  const AlgebraClass cls = classify(f);
  report.classification = to_row(cls);
  if (cls.tag == AlgebraTag::Su2) {
    const long depth = termination_depth(f);
    report.classification.termination_depth = depth;
    if (config.clamp_to_termination && depth > 0 && config.dim > static_cast<std::size_t>(depth)) {
      report.effective_dim = static_cast<std::size_t>(depth);
      report.notes.push_back("D clamped from " + std::to_string(config.dim) + " to the su(2) termination depth " +
                             std::to_string(depth));
    }
  }

  try {
    if (report.effective_dim < static_cast<std::size_t>(config.k) + 2) {
      throw RepresentationInvalid("termination depth " + std::to_string(report.effective_dim) +
                                      " leaves no interior for k=" + std::to_string(config.k),
                                  static_cast<long>(report.effective_dim));
    }
    const GradedRep rep = build_rep(f, report.effective_dim);
    extend(report.records, verify_wk_relations(rep, f, tol));

    const FractionalSystem sys = build_system(rep, f);
    extend(report.records, verify_fractional_relations(sys, tol));

    const auto subsystems = build_subsystems(sys);
    for (const auto& sub : subsystems) {
      extend(report.records, verify_subsystem(sys, sub, tol));
    }
    extend(report.records, verify_superposition(sys, subsystems, tol));
    extend(report.records, verify_ordinary_limit(sys));

    const auto closure = closure_check(rep, cls, tol);
    extend(report.records, closure.records);

    const SpectrumTable table = spectrum(sys);
    const PairingSummary pairing = isospectral_check(table, sys, {tol, 10 * tol});
    extend(report.records, pairing.records);
    report.pairing = {pairing.matched, pairing.unmatched, pairing.zero_modes};
    for (const auto& p : table.partners) {
      for (const auto& level : p.levels) {
        report.levels.push_back({p.s, level.n, static_cast<double>(level.value)});
      }
    }
    for (const auto& level : table.total) {
      report.levels.push_back({0, level.n, static_cast<double>(level.value)});
    }
    for (const auto& d : table.degeneracies) {
      report.degeneracies.push_back({static_cast<double>(d.value), d.multiplicity});
    }
  } catch (const ConstructionError& e) {
    report.error = to_error(e);
  }

  report.overall_pass = !report.error && all_pass(report.records);
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int exit_status(const VerificationReport& report) {
  if (report.error) return 2;
  return all_pass(report.records) ? 0 : 1;
}

void to_json(json& j, const RunConfig& c) {
  j = json{{"k", c.k},
           {"D", c.dim},
           {"family", family_name(c.family)},
           {"params", c.params},
           {"table", c.table_path},
           {"tolerance", c.tolerance},
           {"out", c.out_path},
           {"format", c.format},
           {"clamp_to_termination", c.clamp_to_termination}};
}

void from_json(const json& j, RunConfig& c) {
  j.at("k").get_to(c.k);
  j.at("D").get_to(c.dim);
  c.family = parse_family(j.at("family").get<std::string>());
  j.at("params").get_to(c.params);
  j.at("table").get_to(c.table_path);
  j.at("tolerance").get_to(c.tolerance);
  j.at("out").get_to(c.out_path);
  j.at("format").get_to(c.format);
  j.at("clamp_to_termination").get_to(c.clamp_to_termination);
}

void to_json(json& j, const Record& r) {
  j = json{{"name", r.name},         {"identity", r.identity},
           {"residual", r.residual}, {"tolerance", r.tolerance},
           {"pass", r.pass},         {"subspace", to_string(r.subspace)},
           {"bound", to_string(r.bound)}};
}

void from_json(const json& j, Record& r) {
  j.at("name").get_to(r.name);
  j.at("identity").get_to(r.identity);
  j.at("residual").get_to(r.residual);
  j.at("tolerance").get_to(r.tolerance);
  j.at("pass").get_to(r.pass);
  r.subspace = j.at("subspace").get<std::string>() == "full" ? Subspace::Full : Subspace::Interior;
  r.bound = j.at("bound").get<std::string>() == "above" ? Bound::Above : Bound::Below;
}

void to_json(json& j, const VerificationReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"partner", l.partner}, {"n", l.n}, {"value", l.value}});
  }
  json degeneracies = json::array();
  for (const auto& d : r.degeneracies) {
    degeneracies.push_back({{"value", d.value}, {"multiplicity", d.multiplicity}});
  }
  json classification{{"tag", r.classification.tag},
                      {"potential", r.classification.potential},
                      {"family", r.classification.family},
                      {"affine", nullptr},
                      {"termination_depth", nullptr}};
  if (r.classification.affine) {
    classification["affine"] = {{"a", r.classification.affine->first}, {"b", r.classification.affine->second}};
  }
  if (r.classification.termination_depth) {
    classification["termination_depth"] = *r.classification.termination_depth;
  }
  j = json{{"config", r.config},
           {"effective_D", r.effective_dim},
           {"records", r.records},
           {"spectrum",
            {{"levels", levels},
             {"degeneracies", degeneracies},
             {"pairing",
              {{"matched", r.pairing.matched},
               {"unmatched", r.pairing.unmatched},
               {"zero_modes", r.pairing.zero_modes}}}}},
           {"classification", classification},
           {"notes", r.notes},
           {"error", error_json(r.error)},
           {"overall_pass", r.overall_pass},
           {"wall_time_s", r.wall_time_s}};
}

void from_json(const json& j, VerificationReport& r) {
  j.at("config").get_to(r.config);
  j.at("effective_D").get_to(r.effective_dim);
  j.at("records").get_to(r.records);
  const json& spectrum_json = j.at("spectrum");
  r.levels.clear();
  for (const auto& l : spectrum_json.at("levels")) {
    r.levels.push_back({l.at("partner").get<int>(), l.at("n").get<long>(), l.at("value").get<double>()});
  }
  r.degeneracies.clear();
  for (const auto& d : spectrum_json.at("degeneracies")) {
    r.degeneracies.push_back({d.at("value").get<double>(), d.at("multiplicity").get<int>()});
  }
  const json& pairing = spectrum_json.at("pairing");
  pairing.at("matched").get_to(r.pairing.matched);
  pairing.at("unmatched").get_to(r.pairing.unmatched);
  pairing.at("zero_modes").get_to(r.pairing.zero_modes);

  const json& cls = j.at("classification");
  r.classification.tag = cls.at("tag").get<std::string>();
  r.classification.potential = cls.at("potential").get<std::string>();
  r.classification.family = cls.at("family").get<std::string>();
  r.classification.affine.reset();
  if (!cls.at("affine").is_null()) {
    r.classification.affine =
        std::make_pair(cls.at("affine").at("a").get<double>(), cls.at("affine").at("b").get<double>());
  }
  r.classification.termination_depth.reset();
  if (!cls.at("termination_depth").is_null()) {
    r.classification.termination_depth = cls.at("termination_depth").get<long>();
  }
  j.at("notes").get_to(r.notes);
  r.error = error_from_json(j.at("error"));
  j.at("overall_pass").get_to(r.overall_pass);
  j.at("wall_time_s").get_to(r.wall_time_s);
}

void write_spectrum_csv(std::ostream& out, const VerificationReport& report) {
  std::ostringstream buf;
  buf.precision(17);
  buf << "partner_s,level_n,eigenvalue\n";
  for (const auto& l : report.levels) {
    if (l.partner != 0) buf << l.partner << ',' << l.n << ',' << l.value << '\n';
  }
  for (const auto& l : report.levels) {
    if (l.partner == 0) buf << "total," << l.n << ',' << l.value << '\n';
  }
  out << buf.str();
}

Decomposition run_decompose(const RunConfig& config) {
  validate(config);
  const auto f = make_structure_functions(config);
  Decomposition d;
  d.config = config;
  try {
    const FractionalSystem sys = build_system(f, config.dim);
    std::vector<int> labels;
    if (sys.k() == 2) labels.push_back(1);
    for (int s = 2; s <= sys.k(); ++s) labels.push_back(s);
    for (int s : labels) {
      const Subsystem sub = build_subsystem(sys, s);
      SubsystemData data;
      data.s = s;
      data.lower_partner = real_diagonal_double(sys.partner(s - 1));
      data.upper_partner = real_diagonal_double(sys.partner(s));
      data.h_diagonal = real_diagonal_double(sub.h);
      for (Eigen::Index col = 0; col < sub.x_minus.cols(); ++col) {
        for (Eigen::Index row = 0; row < sub.x_minus.rows(); ++row) {
          const Scalar v = sub.x_minus(row, col);
          if (v != Scalar(0)) {
            data.x_minus.emplace_back(static_cast<long>(row), static_cast<long>(col), static_cast<double>(v.real()));
          }
        }
      }
      data.records = verify_subsystem(sys, sub, config.tolerance);
      d.subsystems.push_back(std::move(data));
    }
  } catch (const ConstructionError& e) {
    d.error = to_error(e);
  }
  return d;
}

json to_json(const Decomposition& d) {
  json subs = json::array();
  for (const auto& s : d.subsystems) {
    json entries = json::array();
    for (const auto& [row, col, value] : s.x_minus) {
      entries.push_back({row, col, value});
    }
    subs.push_back({{"s", s.s},
                    {"lower_partner_diagonal", s.lower_partner},
                    {"upper_partner_diagonal", s.upper_partner},
                    {"x_minus_entries", entries},
                    {"h_diagonal", s.h_diagonal},
                    {"records", s.records}});
  }
  return json{{"config", d.config}, {"subsystems", subs}, {"error", error_json(d.error)}};
}

void write_decomposition_csv(std::ostream& out, const Decomposition& d) {
  std::ostringstream buf;
  buf.precision(17);
  buf << "s,row,col,value\n";
  for (const auto& s : d.subsystems) {
    for (const auto& [row, col, value] : s.x_minus) {
      buf << s.s << ',' << row << ',' << col << ',' << value << '\n';
    }
  }
  out << buf.str();
}

std::vector<ScanPoint> run_scan(const RunConfig& base, const std::vector<std::pair<double, double>>& grid) {
  std::vector<std::future<ScanPoint>> jobs;
  jobs.reserve(grid.size());
  for (const auto& [a, b] : grid) {
    RunConfig config = base;
    config.family = FamilyKind::Affine;
    config.params = {a, b};
    config.clamp_to_termination = true;
    jobs.push_back(std::async(std::launch::async, [config, a = a, b = b] {
      ScanPoint point{a, b, {}};
      try {
        point.report = run_verify(config);
      } catch (const ConfigError& e) {
        point.report.config = config;
        point.report.error = ReportError{"ConfigError", e.what(), -1};
      }
      return point;
    }));
  }
  std::vector<ScanPoint> points;
  points.reserve(jobs.size());
  for (auto& job : jobs) {
    points.push_back(job.get());
  }
  return points;
}

json scan_to_json(const std::vector<ScanPoint>& points) {
  json out = json::array();
  for (const auto& p : points) {
    out.push_back({{"a", p.a},
                   {"b", p.b},
                   {"tag", p.report.classification.tag},
                   {"potential", p.report.classification.potential},
                   {"exit_status", exit_status(p.report)},
                   {"report", p.report}});
  }
  return json{{"points", out}, {"exit_status", scan_exit_status(points)}};
}

int scan_exit_status(const std::vector<ScanPoint>& points) {
  int status = 0;
  for (const auto& p : points) {
    status = std::max(status, exit_status(p.report));
  }
  return status;
}

std::vector<std::pair<double, double>> parse_grid(const std::string& text) {
  std::vector<std::pair<double, double>> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) {
      throw ConfigError("grid point '" + item + "' must be 'a,b'");
    }
    try {
      std::size_t used_a = 0, used_b = 0;
      const std::string a_txt = item.substr(0, comma);
      const std::string b_txt = item.substr(comma + 1);
      const double a = std::stod(a_txt, &used_a);
      const double b = std::stod(b_txt, &used_b);
      if (a_txt.find_first_not_of(" \t", used_a) != std::string::npos ||
          b_txt.find_first_not_of(" \t", used_b) != std::string::npos) {
        throw std::invalid_argument("trailing");
      }
      grid.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw ConfigError("grid point '" + item + "' is not a pair of numbers");
    }
  }
  return grid;
}

}  // namespace fsusy
