#include "fsusy/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "fsusy/errors.hpp"
#include "fsusy/report.hpp"

namespace fsusy {

namespace {

constexpr int kConfigExit = 3;

struct Options {
  int k = 0;
  std::size_t dim = 0;
  std::vector<double> affine;
  std::vector<double> cyclic;
  std::string table;
  double tol = kDefaultTolerance;
  std::string out;
  std::string format;
  std::string grid;
};

void add_common(CLI::App* cmd, Options& o, bool with_family) {
  cmd->add_option("--k", o.k, "grading order k >= 2")->required();
  cmd->add_option("--D", o.dim, "truncation dimension, D >= k + 2")->required();
  if (with_family) {
    auto* affine = cmd->add_option("--affine", o.affine, "affine family f_s(n) = a n + b")->expected(2);
    auto* cyclic = cmd->add_option("--cyclic", o.cyclic, "cyclic constants c_0,...,c_{k-1}")->delimiter(',');
    auto* table = cmd->add_option("--table", o.table, "table file with header s,n,value");
    affine->excludes(cyclic)->excludes(table);
    cyclic->excludes(table);
  }
  cmd->add_option("--tol", o.tol, "identity tolerance")->capture_default_str();
  cmd->add_option("--out", o.out, "output path (default: standard output)");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

RunConfig to_config(const Options& o, const std::string& default_format) {
  RunConfig c;
  c.k = o.k;
  c.dim = o.dim;
  c.tolerance = o.tol;
  c.out_path = o.out;
  c.format = o.format.empty() ? default_format : o.format;
  if (!o.affine.empty()) {
    c.family = FamilyKind::Affine;
    c.params = o.affine;
  } else if (!o.cyclic.empty()) {
    c.family = FamilyKind::Cyclic;
    c.params = o.cyclic;
  } else if (!o.table.empty()) {
    c.family = FamilyKind::Table;
    c.table_path = o.table;
  } else {
    throw ConfigError("one of --affine, --cyclic or --table is required");
  }
  return c;
}

// Writes to the configured path, or to `out` when no path is set.
void emit(const RunConfig& c, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
  if (c.out_path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) {
    throw ConfigError("cannot open output file " + c.out_path);
  }
  writer(file);
}

void write_records_csv(std::ostream& out, const VerificationReport& report) {
  std::ostringstream buf;
  buf.precision(17);
  buf << "name,residual,tolerance,pass,subspace\n";
  for (const auto& r : report.records) {
    buf << r.name << ',' << r.residual << ',' << r.tolerance << ',' << (r.pass ? "true" : "false") << ','
        << to_string(r.subspace) << '\n';
  }
  out << buf.str();
}

std::string pairing_summary(const VerificationReport& r) {
  std::ostringstream s;
  s << "isospectral pairing: " << r.pairing.matched << " matched, " << r.pairing.unmatched.size() << " unmatched, "
    << r.pairing.zero_modes.size() << " zero modes";
  if (!r.degeneracies.empty()) {
    s << "\nH degeneracies:";
    for (const auto& d : r.degeneracies) {
      s << ' ' << d.value << 'x' << d.multiplicity;
    }
  }
  if (r.error) {
    s << "\nerror: " << r.error->kind << " at level " << r.error->level << ": " << r.error->message;
  }
  return s.str();
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const RunConfig c = to_config(o, "json");
  const VerificationReport report = run_verify(c);
  emit(c, out, [&](std::ostream& os) {
    if (c.format == "csv") {
      write_records_csv(os, report);
    } else {
      os << nlohmann::json(report).dump(2) << '\n';
    }
  });
  if (report.error) {
    err << "construction error: " << report.error->kind << " at level " << report.error->level << '\n';
  }
  return exit_status(report);
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
  const RunConfig c = to_config(o, "csv");
  const VerificationReport report = run_verify(c);
  emit(c, out, [&](std::ostream& os) {
    if (c.format == "csv") {
      write_spectrum_csv(os, report);
    } else {
      const nlohmann::json j = report;
      os << nlohmann::json{{"spectrum", j.at("spectrum")}, {"error", j.at("error")}}.dump(2) << '\n';
    }
  });
  (c.out_path.empty() ? err : out) << pairing_summary(report) << '\n';
  return exit_status(report);
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const RunConfig c = to_config(o, "json");
  const Decomposition d = run_decompose(c);
  emit(c, out, [&](std::ostream& os) {
    if (c.format == "csv") {
      write_decomposition_csv(os, d);
    } else {
      os << to_json(d).dump(2) << '\n';
    }
  });
  if (d.error) {
    err << "construction error: " << d.error->kind << " at level " << d.error->level << '\n';
    return 2;
  }
  for (const auto& s : d.subsystems) {
    if (!all_pass(s.records)) return 1;
  }
  return 0;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.k = o.k;
  c.dim = o.dim;
  c.tolerance = o.tol;
  c.out_path = o.out;
  c.format = "json";
  c.family = FamilyKind::Affine;
  c.params = {0, 1};
  validate(c);
  const auto grid = parse_grid(o.grid);
  const auto points = run_scan(c, grid);
  emit(c, out, [&](std::ostream& os) { os << scan_to_json(points).dump(2) << '\n'; });
  for (const auto& p : points) {
    err << "(" << p.a << ", " << p.b << ") -> " << p.report.classification.tag << " exit " << exit_status(p.report)
        << '\n';
  }
  return scan_exit_status(points);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional supersymmetric systems built from generalized Weyl-Heisenberg algebras"};
  app.name("fsusy");
  app.require_subcommand(1);

  Options o;
  auto* verify = app.add_subcommand("verify", "run every identity check and write a JSON report");
  add_common(verify, o, true);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "write partner spectra (CSV) and the pairing summary");
  add_common(spectrum_cmd, o, true);
  auto* decompose = app.add_subcommand("decompose", "write sub-system operator data");
  add_common(decompose, o, true);
  auto* scan = app.add_subcommand("scan", "run the affine pipeline over a grid of (a, b)");
  add_common(scan, o, false);
  scan->add_option("--grid", o.grid, "grid points 'a,b;a,b;...' (use --grid=... when a is negative)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "fsusy: " << e.what() << '\n';
    return kConfigExit;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, out, err);
    if (decompose->parsed()) return cmd_decompose(o, out, err);
    return cmd_scan(o, out, err);
  } catch (const ConfigError& e) {
    err << "fsusy: " << e.what() << '\n';
    return kConfigExit;
  }
}

}  // namespace fsusy
