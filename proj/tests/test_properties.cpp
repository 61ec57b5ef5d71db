#include <random>

#include "doctest.h"
#include "fsusy/errors.hpp"
#include "fsusy/report.hpp"
#include "fsusy/spectra.hpp"

using namespace fsusy;

namespace {

constexpr unsigned kSeed = 20240611;

StructureFunctionSet random_cyclic(std::mt19937& rng, int k, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<Real> c;
  for (int s = 0; s < k; ++s) c.push_back(dist(rng));
  return StructureFunctionSet::cyclic(c);
}

// Level at which the unrolled recurrence first breaks, or -1.
long unrolled_break(const StructureFunctionSet& f, std::size_t dim) {
  Real g = 0;
  for (std::size_t n = 0; n < dim; ++n) {
    g += f(static_cast<int>(n % static_cast<std::size_t>(f.k())), static_cast<long>(n));
    const bool inner = n + 1 < dim;
    if (g < -1e-12L || (inner && g <= 1e-12L)) return static_cast<long>(n + 1);
  }
  return -1;
}

Real worst_residual(const GradedRep& rep, const StructureFunctionSet& f) {
  Real worst = 0;
  for (const auto& r : verify_wk_relations(rep, f)) worst = std::max<Real>(worst, r.residual);
  return worst;
}

}  // namespace

TEST_CASE("property: projectors partition the identity") {
  for (int k = 2; k <= 7; ++k) {
    for (std::size_t dim : {static_cast<std::size_t>(k), std::size_t{17}, std::size_t{32}}) {
      const auto rep = build_rep(StructureFunctionSet::affine(k, 0, 1), dim);
      Matrix sum = zeros(dim);
      for (int s = 0; s < k; ++s) {
        sum += rep.projector(s);
        for (int t = 0; t < k; ++t) {
          const Matrix prod = rep.projector(s) * rep.projector(t);
          CHECK(max_abs(prod - (s == t ? rep.projector(s) : zeros(dim))) < 1e-15L);
        }
        for (std::size_t n = 0; n < dim; ++n) {
          const auto i = static_cast<Eigen::Index>(n);
          CHECK((rep.projector(s)(i, i).real() == 1) == (grade_of(static_cast<long>(n), k) == s));
        }
      }
      CHECK(max_abs(sum - identity(dim)) < 1e-15L);
    }
  }
}

TEST_CASE("property: grades are periodic in n") {
  for (int k = 2; k <= 9; ++k) {
    for (long n = -20; n < 60; ++n) {
      CHECK(grade_of(n + k, k) == grade_of(n, k));
      CHECK(grade_of(n, k) >= 0);
      CHECK(grade_of(n, k) < k);
    }
  }
}

TEST_CASE("property: [N, X-] + X- = 0 on the full space") {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 5;
    const auto f = random_cyclic(rng, k, 0.2, 3.0);
    const auto rep = build_rep(f, 8 + static_cast<std::size_t>(trial));
    CHECK(max_abs(commutator(rep.number, rep.x_minus) + rep.x_minus) < 1e-15L);
  }
}

TEST_CASE("property: RepresentationInvalid iff the unrolled recurrence breaks") {
  std::mt19937 rng(kSeed + 1);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<int> kdist(2, 6);
  std::uniform_int_distribution<int> ddist(2, 32);
  int invalid = 0, valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int k = kdist(rng);
    const auto dim = static_cast<std::size_t>(std::max(ddist(rng), k));
    const auto f = trial % 2 == 0 ? StructureFunctionSet::affine(k, coef(rng), coef(rng) + 1.0)
                                  : random_cyclic(rng, k, -0.5, 2.0);
    const long expected = unrolled_break(f, dim);
    long thrown = -1;
    try {
      build_rep(f, dim);
    } catch (const RepresentationInvalid& e) {
      thrown = e.level();
    }
    CHECK(thrown == expected);
    (expected < 0 ? valid : invalid)++;
  }
  CHECK(valid > 20);
  CHECK(invalid > 20);
}

TEST_CASE("property: classification is invariant under positive rescaling") {
  std::mt19937 rng(kSeed + 2);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = trial % 7 == 0 ? 0.0 : coef(rng);
    const double b = coef(rng);
    const double lambda = scale(rng);
    const auto base = classify(StructureFunctionSet::affine(3, a, b));
    const auto scaled = classify(StructureFunctionSet::affine(3, lambda * a, lambda * b));
    CHECK(base.tag == scaled.tag);
    CHECK(base.potential == scaled.potential);
  }
}

TEST_CASE("property: the closure residual does not depend on D") {
  for (const auto& f : {StructureFunctionSet::affine(3, 1, 2), StructureFunctionSet::affine(4, 0, 1.5L),
                        StructureFunctionSet::affine(2, 2, 1)}) {
    for (std::size_t dim : {std::size_t{10}, std::size_t{20}, std::size_t{32}}) {
      const auto closure = closure_check(build_rep(f, dim), classify(f));
      REQUIRE(closure.records.size() == 1);
      CHECK(closure.records.front().residual < 1e-10);
    }
  }
}

TEST_CASE("property: every single-entry corruption of a generator is detected") {
  for (int k : {2, 3, 4}) {
    const auto f = StructureFunctionSet::affine(k, 1, 1);
    const std::size_t dim = static_cast<std::size_t>(k) + 5;
    const auto clean = build_rep(f, dim);
    REQUIRE(worst_residual(clean, f) < 1e-10L);
    for (int which = 0; which < 4; ++which) {
      for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(dim); ++i) {
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(dim); ++j) {
          GradedRep bad = clean;
          Matrix& target = which == 0 ? bad.x_minus : which == 1 ? bad.x_plus : which == 2 ? bad.number : bad.grading;
          target(i, j) += Real(1e-3);
          CHECK_MESSAGE(worst_residual(bad, f) > 1e-5L, "generator " << which << " entry " << i << "," << j);
        }
      }
    }
  }
}

TEST_CASE("property: reports survive a JSON round trip and are reproducible") {
  std::mt19937 rng(kSeed + 3);
  std::uniform_real_distribution<double> c(0.3, 2.5);
  for (int trial = 0; trial < 10; ++trial) {
    RunConfig config;
    config.k = 2 + trial % 5;
    config.dim = static_cast<std::size_t>(config.k) + 4 + static_cast<std::size_t>(trial);
    if (trial % 2 == 0) {
      config.family = FamilyKind::Affine;
      config.params = {trial % 4 == 0 ? 0.0 : c(rng), c(rng)};
    } else {
      config.family = FamilyKind::Cyclic;
      for (int s = 0; s < config.k; ++s) config.params.push_back(c(rng));
    }
    auto first = run_verify(config);
    CHECK(first.overall_pass);
    const auto back = nlohmann::json::parse(nlohmann::json(first).dump()).get<VerificationReport>();
    CHECK(back == first);
    auto second = run_verify(config);
    first.wall_time_s = second.wall_time_s = 0;
    CHECK(first == second);
  }
}
