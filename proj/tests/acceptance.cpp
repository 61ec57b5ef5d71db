// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fsusy/cli.hpp"
#include "fsusy/errors.hpp"
#include "fsusy/report.hpp"
#include "fsusy/spectra.hpp"

using namespace fsusy;

namespace {

struct GridPoint {
  int k;
  std::size_t dim;
  std::string label;
  StructureFunctionSet f;
};

std::vector<GridPoint> make_grid() {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  std::vector<GridPoint> grid;
  for (int k = 2; k <= 6; ++k) {
    std::vector<Real> constants;
    for (int s = 0; s < k; ++s) constants.push_back(dist(rng));
    const std::vector<std::pair<std::string, StructureFunctionSet>> families{
        {"affine(0,1)", StructureFunctionSet::affine(k, 0, 1)},
        {"affine(1,1)", StructureFunctionSet::affine(k, 1, 1)},
        {"affine(1,2)", StructureFunctionSet::affine(k, 1, 2)},
        {"cyclic", StructureFunctionSet::cyclic(constants)},
    };
    for (const auto& [label, f] : families) {
      for (std::size_t dim : {static_cast<std::size_t>(k) + 4, std::size_t{32}}) {
        grid.push_back({k, dim, label, f});
      }
    }
  }
  return grid;
}

std::string where(const GridPoint& p) {
  return "k=" + std::to_string(p.k) + " D=" + std::to_string(p.dim) + " " + p.label;
}

// Tracks the worst margin of a set of threshold checks.
struct Criterion {
  std::string id;
  std::string title;
  bool pass = true;
  std::size_t checks = 0;
  double worst = 0;
  std::string worst_at;
  std::string failure;

  void below(double residual, double threshold, const std::string& at) {
    ++checks;
    if (residual > worst) {
      worst = residual;
      worst_at = at;
    }
    if (!(residual < threshold)) fail(at + ": " + std::to_string(residual) + " >= " + std::to_string(threshold));
  }

  void above(double value, double threshold, const std::string& at) {
    ++checks;
    if (!(value > threshold)) fail(at + ": " + std::to_string(value) + " <= " + std::to_string(threshold));
  }

  void require(bool ok, const std::string& at) {
    ++checks;
    if (!ok) fail(at);
  }

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }

  void print() const {
    std::printf("[%s] %s %s: %zu checks", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), checks);
    if (!worst_at.empty()) std::printf(", worst residual %.3e (%s)", worst, worst_at.c_str());
    if (!pass) std::printf(", first failure: %s", failure.c_str());
    std::printf("\n");
  }
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

void criterion_wk(Criterion& c, const std::vector<GridPoint>& grid) {
  for (const auto& p : grid) {
    const auto rep = build_rep(p.f, p.dim);
    for (const auto& r : verify_wk_relations(rep, p.f)) {
      if (r.name == "wk.shift_adjoint") continue;
      c.below(r.residual, 1e-10, where(p) + " " + r.name);
    }
  }
}

void criterion_fractional(Criterion& c, const std::vector<GridPoint>& grid) {
  const std::map<std::string, double> thresholds{
      {"frac.nilpotency_minus", 1e-10}, {"frac.nilpotency_plus", 1e-10}, {"frac.cyclic_sum", 1e-10},
      {"frac.conserved_minus", 1e-10},  {"frac.conserved_plus", 1e-10},  {"frac.hermitian", 1e-12}};
  for (const auto& p : grid) {
    const auto sys = build_system(p.f, p.dim);
    std::size_t seen = 0;
    for (const auto& r : verify_fractional_relations(sys)) {
      if (r.name == "frac.nilpotency_order") {
        c.above(r.residual, 1e-6, where(p) + " |Q-^(k-1)|");
        ++seen;
      } else if (auto it = thresholds.find(r.name); it != thresholds.end()) {
        c.below(r.residual, it->second, where(p) + " " + r.name);
        ++seen;
      }
    }
    c.require(seen == thresholds.size() + 1, where(p) + ": missing fractional records");
  }
}

void criterion_partners(Criterion& c, const std::vector<GridPoint>& grid) {
  const std::vector<std::pair<std::string, double>> thresholds{
      {"frac.partner_expansion", 1e-12},  {"sub.nilpotency", 1e-12},         {"sub.anticommutator", 1e-10},
      {"sub.partner_sum", 1e-10},         {"sup.intertwining_lower", 1e-10}, {"sup.intertwining_raise", 1e-10},
      {"sup.superposition", 1e-10}};
  for (const auto& p : grid) {
    const auto sys = build_system(p.f, p.dim);
    const auto subs = build_subsystems(sys);
    Fragment records = verify_fractional_relations(sys);
    for (const auto& sub : subs) extend(records, verify_subsystem(sys, sub));
    extend(records, verify_superposition(sys, subs));
    std::size_t seen = 0;
    for (const auto& r : records) {
      for (const auto& [prefix, threshold] : thresholds) {
        if (starts_with(r.name, prefix)) {
          c.below(r.residual, threshold, where(p) + " " + r.name);
          ++seen;
        }
      }
    }
    // One expansion and one superposition record, five per sub-system.
    c.require(seen == 2 + 5 * subs.size(), where(p) + ": missing partner records");
  }
}

void criterion_pairing(Criterion& c, const std::vector<GridPoint>& grid) {
  std::size_t matched = 0;
  for (const auto& p : grid) {
    const auto sys = build_system(p.f, p.dim);
    const auto summary = isospectral_check(spectrum(sys), sys, {1e-10, 1e-9});
    matched += summary.matched;
    c.below(static_cast<double>(summary.max_mismatch), 1e-9, where(p) + " pairing mismatch");
    c.require(summary.unmatched.empty(), where(p) + ": " + std::to_string(summary.unmatched.size()) +
                                             " unmatched positive levels");
  }
  c.require(matched > 0, "no levels were paired");
}

void criterion_k2(Criterion& c) {
  const auto f = StructureFunctionSet::affine(2, 0, 1);
  for (std::size_t dim : {std::size_t{6}, std::size_t{32}}) {
    const auto sys = build_system(f, dim);
    const std::string at = "k=2 D=" + std::to_string(dim);
    // Hand-reduced k = 2 Hamiltonian: X+X- + f_1(N) Pi_1.
    Matrix oracle = sys.rep.x_plus * sys.rep.x_minus;
    for (std::size_t n = 1; n < dim; n += 2) {
      const auto i = static_cast<Eigen::Index>(n);
      oracle(i, i) += f(1, static_cast<long>(n));
    }
    for (std::size_t n = 0; n < sys.rep.interior; ++n) {
      const auto i = static_cast<Eigen::Index>(n);
      const double ladder = static_cast<double>(2 * ((n + 1) / 2));
      c.below(static_cast<double>(std::abs(sys.hamiltonian(i, i) - Scalar(ladder))), 1e-12,
              at + " H(" + std::to_string(n) + ") vs 0,2,2,4,4,...");
    }
    c.below(static_cast<double>(max_abs_leading(sys.hamiltonian - oracle, sys.rep.interior)), 1e-12,
            at + " H vs X+X- + f_1(N) Pi_1");
    const auto h1 = build_subsystem(sys, 1);
    c.below(static_cast<double>(max_abs_leading(h1.h - sys.hamiltonian, sys.rep.interior)), 1e-12, at + " h(1) vs H");
  }
}

void criterion_su2(Criterion& c) {
  const auto f = StructureFunctionSet::affine(2, -1, 3);
  // G(n) = 3n - n(n-1)/2 first reaches zero at n = 7.
  long oracle = -1;
  for (long n = 1; n < 100 && oracle < 0; ++n) {
    if (3 * n - n * (n - 1) / 2 <= 0) oracle = n;
  }
  c.require(oracle == 7, "closed-form termination level");
  for (std::size_t dim : {std::size_t{8}, std::size_t{12}, std::size_t{32}}) {
    long thrown = -1;
    try {
      build_rep(f, dim);
    } catch (const RepresentationInvalid& e) {
      thrown = e.level();
    }
    c.require(thrown == oracle, "affine(-1,3) D=" + std::to_string(dim) + " raised at level " +
                                    std::to_string(thrown));
  }
  const auto morse = classify(f);
  c.require(morse.tag == AlgebraTag::Su2 && morse.potential == "Morse", "affine(-1,3) -> su2/Morse");
  const auto osc = classify(StructureFunctionSet::affine(2, 0, 1));
  c.require(osc.tag == AlgebraTag::WeylHeisenberg && osc.potential == "harmonic oscillator",
            "affine(0,1) -> WeylHeisenberg/oscillator");
  const auto pt = classify(StructureFunctionSet::affine(2, 2, 1));
  c.require(pt.tag == AlgebraTag::Su11 && pt.potential == "Poschl-Teller", "affine(2,1) -> su11/Poschl-Teller");
}

void criterion_negative(Criterion& c) {
  for (int k = 2; k <= 6; ++k) {
    const auto f = StructureFunctionSet::affine(k, 1, 1);
    const std::size_t dim = static_cast<std::size_t>(k) + 4;
    const auto clean = build_rep(f, dim);
    const char* names[] = {"X-", "X+", "N", "K"};
    for (int which = 0; which < 4; ++which) {
      for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(dim); ++i) {
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(dim); ++j) {
          GradedRep bad = clean;
          Matrix& m = which == 0 ? bad.x_minus : which == 1 ? bad.x_plus : which == 2 ? bad.number : bad.grading;
          m(i, j) += Real(1e-3);
          double worst = 0;
          for (const auto& r : verify_wk_relations(bad, f)) worst = std::max(worst, r.residual);
          c.above(worst, 1e-5, "k=" + std::to_string(k) + " " + names[which] + "(" + std::to_string(i) + "," +
                                   std::to_string(j) + ") corruption undetected");
        }
      }
    }
  }

  const std::vector<std::pair<std::vector<std::string>, int>> exits{
      {{"verify", "--k", "3", "--D", "12", "--affine", "1", "1"}, 0},
      {{"verify", "--k", "4", "--D", "16", "--cyclic", "0.5,1.5,1,2"}, 0},
      {{"verify", "--k", "5", "--D", "32", "--affine", "1", "2", "--tol", "1e-30"}, 1},
      {{"verify", "--k", "2", "--D", "10", "--affine", "-1", "3"}, 2},
      {{"verify", "--k", "3", "--D", "4", "--affine", "0", "1"}, 3},
      {{"verify", "--k", "3", "--D", "10", "--cyclic", "1,2"}, 3},
      {{"verify", "--k", "3", "--D", "10"}, 3},
  };
  for (const auto& [args, expected] : exits) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    std::string cmd;
    for (const auto& a : args) cmd += a + " ";
    c.require(status == expected, "'" + cmd + "' exited " + std::to_string(status) + ", expected " +
                                      std::to_string(expected));
  }
}

}  // namespace

int main() {
  const auto grid = make_grid();
  std::vector<Criterion> criteria{
      {"C1", "W_k relations on the interior"},
      {"C2", "order-k nilpotency, cyclic sum, conservation, self-adjointness"},
      {"C3", "partner expansion, sub-systems, intertwining, superposition"},
      {"C4", "spectral pairing of partner Hamiltonians"},
      {"C5", "k=2 reduces to the ordinary SUSY oscillator"},
      {"C6", "su(2) termination and algebra classification"},
      {"C7", "negative controls and exit codes"},
  };
  const std::vector<std::function<void(Criterion&)>> runners{
      [&](Criterion& c) { criterion_wk(c, grid); },
      [&](Criterion& c) { criterion_fractional(c, grid); },
      [&](Criterion& c) { criterion_partners(c, grid); },
      [&](Criterion& c) { criterion_pairing(c, grid); },
      criterion_k2,
      criterion_su2,
      criterion_negative,
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      runners[i](criteria[i]);
    } catch (const std::exception& e) {
      criteria[i].fail(std::string("exception: ") + e.what());
    }
    criteria[i].print();
    all = all && criteria[i].pass;
  }
  return all ? 0 : 1;
}
