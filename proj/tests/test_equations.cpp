#include <doctest.h>

#include <random>

#include "feqlab/equations.hpp"
#include "feqlab/measure.hpp"
#include "feqlab/solutions.hpp"
#include "oracles.hpp"

using namespace feqlab;
using oracle::cf;

namespace {

struct C4 {
  CatalogEntry entry = build_standard_from_spec("cyclic:4");
  const FiniteSemigroup& s = entry.semigroup;
  const InvolutiveMorphism& neg = entry.morphism("neg");
  const InvolutiveMorphism& id = entry.morphism("id");
  CentralMeasure d1 = dirac(s, 1);
};

const CFunc kSine = cf({0, 1, 0, -1});
const CFunc kCosine = cf({1, 0, -1, 0});
const CFunc kAlt = cf({-1, 1, -1, 1});

}  // namespace

TEST_CASE("d'Alembert defect") {
  C4 c;
  CHECK(defect_dalembert(kCosine, c.s, c.neg).max_defect <= 1e-15);
  CHECK(defect_dalembert(CFunc::constant(4, 1.0), c.s, c.neg).max_defect == 0.0);
  const auto half = defect_dalembert(CFunc::constant(4, 0.5), c.s, c.neg);
  CHECK(half.max_defect == doctest::Approx(0.5));
  CHECK(half.witness_x == 0);
  CHECK(half.witness_y == 0);
  CHECK(half.equation == Equation::Dalembert);
}

TEST_CASE("Kannappan defect") {
  C4 c;
  CHECK(defect_kannappan(kAlt, c.s, c.neg, c.d1).max_defect <= 1e-15);
  CHECK(defect_kannappan(CFunc::constant(4, 1.2), c.s, c.neg, c.d1).max_defect == doctest::Approx(0.48));
  CHECK(defect_kannappan(CFunc(4), c.s, c.neg, c.d1).max_defect == 0.0);
  const auto sine = defect_kannappan(kSine, c.s, c.neg, c.d1);
  CHECK(sine.max_defect == doctest::Approx(2.0));
  // |h(1)+h(3)-2f(1)^2| = 2 as well, but (0,0) comes first.
  CHECK(sine.witness_x == 0);
  CHECK(sine.witness_y == 0);
}

TEST_CASE("Van Vleck defect") {
  C4 c;
  CHECK(defect_vanvleck(kSine, c.s, c.neg, c.d1).max_defect <= 1e-15);
  CHECK(defect_vanvleck(CFunc::constant(4, 0.5), c.s, c.neg, c.d1).max_defect == doctest::Approx(0.5));
  // sigma = id: the integral terms cancel, leaving |2 f(x) f(y)|.
  std::mt19937_64 rng(4);
  const auto f = oracle::random_function(rng, 4);
  double expected = 0.0;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) expected = std::max(expected, std::abs(2.0 * f[x] * f[y]));
  CHECK(defect_vanvleck(f, c.s, c.id, c.d1).max_defect == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("Wilson defect") {
  C4 c;
  CHECK(defect_wilson(kSine, kCosine, c.s, c.neg).max_defect <= 1e-15);
  std::mt19937_64 rng(8);
  const auto g = oracle::random_function(rng, 4);
  CHECK(defect_wilson(g, g, c.s, c.neg).max_defect == defect_dalembert(g, c.s, c.neg).max_defect);
  // |f(2)+f(0)-2f(1)| = 2 at (1,1); the maximum 4 sits at (1,2).
  const auto r = defect_wilson(kSine, CFunc::constant(4, 1.0), c.s, c.neg);
  CHECK(r.max_defect == doctest::Approx(4.0));
  CHECK(r.witness_x == 1);
  CHECK(r.witness_y == 2);
}

TEST_CASE("sine addition defect") {
  C4 c;
  CHECK(defect_sine_addition(kSine, kCosine, c.s).max_defect <= 1e-15);
  std::mt19937_64 rng(2);
  CHECK(defect_sine_addition(CFunc(4), oracle::random_function(rng, 4), c.s).max_defect == 0.0);
  CHECK(defect_sine_addition(CFunc::constant(4, 1.0), CFunc::constant(4, 1.0), c.s).max_defect == 1.0);
}

TEST_CASE("Kannappan with sigma = id") {
  C4 c;
  // f = chi int chi dmu for the character chi_1.
  const CFunc chi = cf({1, {0, 1}, -1, {0, -1}});
  const CFunc f = chi.scaled(integrate(chi, c.d1));
  CHECK(defect_kannappan_sigma_id(f, c.s, c.d1).max_defect <= 1e-15);
  CHECK(defect_kannappan_sigma_id(kSine, c.s, c.d1).max_defect > 0.5);
}

TEST_CASE("defects agree with the naive oracle on random functions") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"cyclic:4", "cyclic:5", "product:2,4", "sym3", "semilattice_chain:4"}) {
    const auto entry = build_standard_from_spec(spec);
    const auto& s = entry.semigroup;
    if (s.center().empty()) continue;
    const auto t = oracle::table_of(s);
    std::vector<Atom> atoms;
    for (Element z : s.center()) atoms.push_back({z, oracle::random_function(rng, 1)[0]});
    const auto mu = validate_measure(s, atoms);
    const auto single = dirac(s, s.center().back());
    for (const auto& m : entry.morphisms) {
      CAPTURE(spec);
      CAPTURE(m.name);
      const auto sig = oracle::map_of(m.morphism);
      for (int trial = 0; trial < 4; ++trial) {
        const auto f = oracle::random_function(rng, s.size());
        const auto g = oracle::random_function(rng, s.size());
        auto same = [](const DefectReport& r, const oracle::Max& o) {
          CHECK(r.max_defect == doctest::Approx(o.value).epsilon(1e-12));
          CHECK(r.witness_x == o.x);
          CHECK(r.witness_y == o.y);
        };
        same(defect_dalembert(f, s, m.morphism), oracle::dalembert(t, sig, f));
        same(defect_kannappan(f, s, m.morphism, mu),
             oracle::integral_equation(t, sig, oracle::atoms_of(mu), f, 1.0));
        same(defect_vanvleck(f, s, m.morphism, mu),
             oracle::integral_equation(t, sig, oracle::atoms_of(mu), f, -1.0));
        same(defect_kannappan(f, s, m.morphism, single),
             oracle::integral_equation(t, sig, oracle::atoms_of(single), f, 1.0));
        same(defect_wilson(f, g, s, m.morphism), oracle::wilson(t, sig, f, g));
        same(defect_sine_addition(f, g, s), oracle::sine_addition(t, f, g));
        same(multiplicativity_defect(f, s), oracle::multiplicative(t, f));
      }
    }
  }
}

TEST_CASE("witnesses are deterministic") {
  C4 c;
  std::mt19937_64 rng(23);
  const auto f = oracle::random_function(rng, 4);
  const auto a = defect_kannappan(f, c.s, c.neg, c.d1);
  const auto b = defect_kannappan(f, c.s, c.neg, c.d1);
  CHECK(a.max_defect == b.max_defect);
  CHECK(a.witness_x == b.witness_x);
  CHECK(a.witness_y == b.witness_y);
}

TEST_CASE("input errors") {
  C4 c;
  CHECK(oracle::thrown([&] { defect_dalembert(CFunc(3), c.s, c.neg); })->code() == ErrorCode::SizeMismatch);
  CHECK(oracle::thrown([&] { defect_kannappan(cf({1, 1, std::nan(""), 1}), c.s, c.neg, c.d1); })->code() ==
        ErrorCode::NonFinite);
  CHECK(oracle::thrown([&] { defect_of(Equation::Wilson, kSine, c.s, c.neg, c.d1); })->code() ==
        ErrorCode::BadParams);
  CHECK(oracle::thrown([] { equation_from_string("cauchy"); })->code() == ErrorCode::BadParams);
  for (auto eq : {Equation::Dalembert, Equation::Kannappan, Equation::VanVleck, Equation::Wilson,
                  Equation::SineAddition, Equation::KannappanSigmaId, Equation::Multiplicative})
    CHECK(equation_from_string(to_string(eq)) == eq);
}

TEST_CASE("Kannappan identities on the alternating solution") {
  C4 c;
  const auto rep = verify_kannappan_identities(kAlt, c.s, c.neg, c.d1);
  CHECK(rep.passes(1e-12));
  CHECK(rep.residual("sigma_invariance").residual == 0.0);
  CHECK(rep.residual("twisted_double_shift").residual == 0.0);
  CHECK(rep.residual("double_shift").residual == 0.0);
  const auto& bic = rep.condition("integral_nonzero_iff_nonzero");
  CHECK(bic.holds);
  CHECK(bic.magnitudes == std::vector<double>{1.0, 1.0});
  CHECK(verify_kannappan_identities(CFunc::constant(4, 1.0), c.s, c.neg, c.d1).passes(0.0));
  // The zero solution: both sides of the biconditional are false.
  CHECK(verify_kannappan_identities(CFunc(4), c.s, c.neg, c.d1).passes(0.0));
}

TEST_CASE("Kannappan identities reject non-solutions") {
  C4 c;
  const auto err = oracle::thrown([&] { verify_kannappan_identities(kSine, c.s, c.neg, c.d1); });
  REQUIRE(err);
  CHECK(err->code() == ErrorCode::NotASolution);
  CHECK(err->witness() == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("Van Vleck identities on the sine solution") {
  C4 c;
  const auto rep = verify_vanvleck_identities(kSine, c.s, c.neg, c.d1);
  CHECK(rep.passes(1e-12));
  CHECK(rep.condition("integral_nonzero").holds);
  CHECK(rep.residual("sigma_antiinvariance").residual == 0.0);
  CHECK(rep.residual("double_integral").residual == 0.0);
  CHECK(rep.residual("twisted_double_integral").residual == 0.0);
  CHECK(rep.residual("twisted_double_shift").residual == 0.0);
  CHECK(rep.residual("double_shift").residual == 0.0);
  CHECK(rep.residual("shift_sigma_invariance").residual == 0.0);
  CHECK(rep.residual("g_dalembert").residual == 0.0);
  CHECK(rep.residual("g_integral").residual == 0.0);
  CHECK(rep.condition("g_nonzero").holds);
  const auto& gg = rep.condition("g_double_integral_nonzero");
  CHECK(gg.holds);
  CHECK(gg.magnitudes == std::vector<double>{1.0});
}

TEST_CASE("Van Vleck identities reject zero and non-solutions") {
  C4 c;
  CHECK(oracle::thrown([&] { verify_vanvleck_identities(CFunc(4), c.s, c.neg, c.d1); })->code() ==
        ErrorCode::ZeroFunction);
  CHECK(oracle::thrown([&] { verify_vanvleck_identities(kAlt, c.s, c.neg, c.d1); })->code() ==
        ErrorCode::NotASolution);
}

TEST_CASE("scaling a nonzero solution breaks it") {
  for (const char* spec : {"cyclic:4", "product:2,4", "cyclic:6"}) {
    const auto entry = build_standard_from_spec(spec);
    const auto& s = entry.semigroup;
    const auto mu = dirac(s, 1);
    for (const auto& m : entry.morphisms) {
      for (const auto& f : enumerate_kannappan(s, m.morphism, mu).members) {
        CHECK(defect_kannappan(f.values, s, m.morphism, mu).max_defect <= 1e-12);
        CHECK(defect_kannappan(f.values.scaled(2.0), s, m.morphism, mu).max_defect > 1e-3);
      }
      for (const auto& f : enumerate_vanvleck(s, m.morphism, mu).members) {
        CHECK(defect_vanvleck(f.values, s, m.morphism, mu).max_defect <= 1e-12);
        CHECK(defect_vanvleck(f.values.scaled(2.0), s, m.morphism, mu).max_defect > 1e-3);
      }
    }
  }
}
