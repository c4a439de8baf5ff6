#include <doctest.h>

#include <cmath>
#include <random>

#include "feqlab/solutions.hpp"
#include "feqlab/stability.hpp"
#include "oracles.hpp"

using namespace feqlab;
using oracle::cf;

namespace {

struct C4 {
  CatalogEntry entry = build_standard_from_spec("cyclic:4");
  const FiniteSemigroup& s = entry.semigroup;
  const InvolutiveMorphism& neg = entry.morphism("neg");
  CentralMeasure d1 = dirac(s, 1);
};

StabilityConfig config(Equation eq, double delta, std::size_t samples, std::uint64_t seed) {
  StabilityConfig cfg;
  cfg.equation = eq;
  cfg.delta = delta;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

const Inequality& find(const DiagnosticsReport& r, const std::string& tag) {
  for (const auto& q : r.inequalities)
    if (q.tag == tag) return q;
  FAIL("missing inequality " << tag);
  throw;
}

}  // namespace

TEST_CASE("stability_bound values") {
  CHECK(stability_bound(0.0, 1.0) == 1.0);
  CHECK(stability_bound(4.0, 1.0) == 2.0);
  CHECK(stability_bound(0.48, 1.0) == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(stability_bound(0.0, 3.0) == 3.0);
  CHECK(oracle::thrown([] { stability_bound(-0.1, 1.0); })->code() == ErrorCode::NegativeDelta);
  CHECK(oracle::thrown([] { stability_bound(0.1, 0.0); })->code() == ErrorCode::BadParams);
}

TEST_CASE("stability_bound is nondecreasing in both arguments") {
  for (int i = 0; i < 40; ++i)
    for (int j = 1; j < 40; ++j) {
      const double d = 0.25 * i, m = 0.1 * j;
      CHECK(stability_bound(d + 0.25, m) >= stability_bound(d, m));
      CHECK(stability_bound(d, m + 0.1) >= stability_bound(d, m));
    }
}

TEST_CASE("the bound follows from the diagonal of the defect") {
  // |2f(x)^2| <= |h(x^2)| + |h(x sigma(x))| + delta <= 2 |mu| sup|f| + delta.
  std::mt19937_64 rng(12);
  C4 c;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_function(rng, 4, 0.7);
    for (Equation eq : {Equation::Kannappan, Equation::VanVleck}) {
      const double delta = defect_of(eq, f, c.s, c.neg, c.d1).max_defect;
      CHECK(f.sup_norm() <= stability_bound(delta, c.d1.norm()) + 1e-9);
    }
  }
}

TEST_CASE("config validation") {
  C4 c;
  auto cfg = config(Equation::Dalembert, 0.5, 10, 1);
  CHECK(oracle::thrown([&] { superstability_scan(c.s, c.neg, c.d1, cfg); })->code() == ErrorCode::BadConfig);
  cfg = config(Equation::Kannappan, -0.5, 10, 1);
  CHECK(oracle::thrown([&] { validate_config(cfg); })->code() == ErrorCode::BadConfig);
  cfg = config(Equation::Kannappan, 0.5, 0, 1);
  CHECK(oracle::thrown([&] { validate_config(cfg); })->code() == ErrorCode::BadConfig);
}

TEST_CASE("scans on C4 report no violations") {
  C4 c;
  for (Equation eq : {Equation::Kannappan, Equation::VanVleck})
    for (double delta : {0.0, 0.1, 0.5, 2.0}) {
      CAPTURE(to_string(eq));
      CAPTURE(delta);
      const auto rep = superstability_scan(c.s, c.neg, c.d1, config(eq, delta, 1000, 7));
      CHECK(rep.violations.empty());
      CHECK(rep.tested + rep.rejected == 1000);
      CHECK(rep.tested > 0);
      CHECK(rep.bound == stability_bound(delta, 1.0));
      CHECK(rep.best_supnorm <= rep.bound + 1e-9);
    }
}

TEST_CASE("at delta = 0 the admitted samples are exact solutions with sup-norm at most |mu|") {
  C4 c;
  const auto rep = superstability_scan(c.s, c.neg, c.d1, config(Equation::VanVleck, 0.0, 500, 3));
  CHECK(rep.violations.empty());
  CHECK(rep.best_supnorm == doctest::Approx(1.0));
}

TEST_CASE("the constant family makes the bound tight") {
  C4 c;
  for (double level : {1.1, 1.3, 2.0}) {
    CAPTURE(level);
    const double delta = 2.0 * level * (level - 1.0);
    CHECK(defect_kannappan(CFunc::constant(4, level), c.s, c.neg, c.d1).max_defect ==
          doctest::Approx(delta));
    CHECK(stability_bound(delta, 1.0) == doctest::Approx(level));
    const auto rep = superstability_scan(c.s, c.neg, c.d1, config(Equation::Kannappan, delta, 1000, 11));
    CHECK(rep.best_supnorm >= level - 1e-9);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("scans are deterministic in the seed") {
  const auto entry = build_standard("sym3");
  const auto& s = entry.semigroup;
  const auto& inv = entry.morphism("inv");
  const auto mu = dirac(s, 0);
  const auto cfg = config(Equation::Kannappan, 0.5, 2000, 99);
  const auto a = superstability_scan(s, inv, mu, cfg);
  const auto b = superstability_scan(s, inv, mu, cfg);
  CHECK(a.tested == b.tested);
  CHECK(a.rejected == b.rejected);
  CHECK(a.best_supnorm == b.best_supnorm);
  CHECK(a.violations.size() == b.violations.size());
  const auto other = superstability_scan(s, inv, mu, config(Equation::Kannappan, 0.5, 2000, 100));
  CHECK(other.violations.empty());
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("falsify_bound") {
  C4 c;
  auto cfg = config(Equation::Kannappan, 0.48, 1, 5);
  const auto k = falsify_bound(c.s, c.neg, c.d1, cfg);
  CHECK(k.bound == doctest::Approx(1.2));
  CHECK(k.best_supnorm >= 1.2 - 1e-3);
  CHECK(k.best_supnorm <= 1.2 + 1e-9);
  CHECK(k.best_defect <= 0.48 + 1e-12);
  CHECK(k.best.sup_norm() == k.best_supnorm);
  CHECK(k.starts > 0);

  cfg.delta = 0.0;
  const auto zero = falsify_bound(c.s, c.neg, c.d1, cfg);
  CHECK(zero.best_supnorm == doctest::Approx(1.0));

  cfg = config(Equation::VanVleck, 0.5, 1, 5);
  const auto v = falsify_bound(c.s, c.neg, c.d1, cfg);
  CHECK(v.best_supnorm <= v.bound + 1e-9);
  CHECK(v.best_supnorm > 0.5);
  CHECK(v.best_defect <= 0.5 + 1e-12);
}

TEST_CASE("diagnostics on an exact Kannappan solution") {
  C4 c;
  const auto r = stability_diagnostics(cf({-1, 1, -1, 1}), c.s, c.neg, c.d1, Equation::Kannappan);
  CHECK(r.delta == 0.0);
  CHECK(r.all_pass());
  for (const auto& q : r.inequalities) {
    CAPTURE(q.tag);
    CHECK(q.lhs == doctest::Approx(0.0));
    CHECK(q.rhs == 0.0);
  }
}

TEST_CASE("diagnostics on a perturbed symmetric function") {
  C4 c;
  const auto f = cf({-0.95, 1.05, -0.95, 1.05});
  const auto r = stability_diagnostics(f, c.s, c.neg, c.d1, Equation::Kannappan);
  CHECK(r.delta == doctest::Approx(defect_kannappan(f, c.s, c.neg, c.d1).max_defect));
  CHECK(r.delta > 0.0);
  CHECK(r.all_pass());
  CHECK(find(r, "twisted_double_shift").rhs == doctest::Approx(r.delta * r.mu_norm / 2));
}

TEST_CASE("diagnostics hold on random near-solutions") {
  std::mt19937_64 rng(21);
  C4 c;
  for (int trial = 0; trial < 100; ++trial) {
    auto noise = oracle::random_function(rng, 4, 0.05);
    // Project onto the symmetric (or antisymmetric) part before adding.
    const CFunc sym = 0.5 * (noise + compose(noise, c.neg));
    const CFunc anti = 0.5 * (noise - compose(noise, c.neg));
    const auto k = stability_diagnostics(cf({-1, 1, -1, 1}) + sym, c.s, c.neg, c.d1, Equation::Kannappan);
    const auto v = stability_diagnostics(cf({0, 1, 0, -1}) + anti, c.s, c.neg, c.d1, Equation::VanVleck);
    CHECK(k.all_pass());
    CHECK(v.all_pass());
  }
}

TEST_CASE("diagnostics preconditions") {
  C4 c;
  auto err = oracle::thrown(
      [&] { stability_diagnostics(cf({0, 1, 0, -1}), c.s, c.neg, c.d1, Equation::Kannappan); });
  REQUIRE(err);
  CHECK(err->code() == ErrorCode::SymmetryViolated);
  err = oracle::thrown(
      [&] { stability_diagnostics(cf({1, 0, -1, 0}), c.s, c.neg, c.d1, Equation::Kannappan); });
  REQUIRE(err);
  CHECK(err->code() == ErrorCode::DegenerateIntegral);
  CHECK(oracle::thrown([&] {
          stability_diagnostics(cf({-1, 1, -1, 1}), c.s, c.neg, c.d1, Equation::VanVleck);
        })->code() == ErrorCode::SymmetryViolated);
}

TEST_CASE("minimize_defect converges onto exact solutions") {
  C4 c;
  const auto k = enumerate_kannappan(c.s, c.neg, c.d1);
  const auto v = enumerate_vanvleck(c.s, c.neg, c.d1);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto start = cf({-1, 1, -1, 1}) + oracle::random_function(rng, 4, 0.05);
    const auto r = minimize_defect(c.s, c.neg, c.d1, Equation::Kannappan, start);
    REQUIRE(r.converged);
    CHECK(r.defect <= 1e-10);
    CHECK((k.find(r.f, 1e-6).has_value() || r.f.sup_norm() <= 1e-6));

    const auto sv = cf({0, 1, 0, -1}) + oracle::random_function(rng, 4, 0.05);
    const auto rv = minimize_defect(c.s, c.neg, c.d1, Equation::VanVleck, sv);
    REQUIRE(rv.converged);
    CHECK((v.find(rv.f, 1e-6).has_value() || rv.f.sup_norm() <= 1e-6));
  }
  CHECK(oracle::thrown([&] {
          minimize_defect(c.s, c.neg, c.d1, Equation::Dalembert, CFunc(4));
        })->code() == ErrorCode::BadParams);
}
