#include "feqlab/equations.hpp"

#include <algorithm>
#include <cmath>

#include "feqlab/characters.hpp"
#include "feqlab/kernels.hpp"
#include "feqlab/measure.hpp"

namespace feqlab {

namespace {

struct PairSpec {
  Equation equation;
  const CFunc* h = nullptr;          // gathered through x*y and x*sigma(y)
  const InvolutiveMorphism* sigma = nullptr;
  double a = 1.0;
  double b = 0.0;
  const CFunc* p = nullptr;          // row factor p(x)
  Complex p_scale = 1.0;
  const CFunc* q = nullptr;
  const CFunc* r = nullptr;          // optional second product term r(x) s(y)
  const CFunc* s = nullptr;
};

void require_function(const CFunc& f, const FiniteSemigroup& s) {
  if (f.size() != s.size())
    throw Error(ErrorCode::SizeMismatch, "function size " + std::to_string(f.size()) +
                                             " does not match semigroup size " +
                                             std::to_string(s.size()));
  if (!f.is_finite()) throw Error(ErrorCode::NonFinite, "function has non-finite values");
}

DefectReport scan(const FiniteSemigroup& s, const PairSpec& spec) {
  const std::size_t n = s.size();
  const auto& kern = kernels::active();
  std::vector<double> residual(n * n);
  std::vector<Element> twisted(spec.sigma ? n : 0);

  for (std::size_t x = 0; x < n; ++x) {
    const auto row = s.row(static_cast<Element>(x));
    if (spec.sigma)
      for (std::size_t y = 0; y < n; ++y) twisted[y] = row[static_cast<std::size_t>((*spec.sigma)(static_cast<Element>(y)))];

    kernels::PairRow pr;
    pr.h = spec.h->data();
    pr.plain = row.data();
    pr.twisted = spec.sigma ? twisted.data() : nullptr;
    pr.a = spec.a;
    pr.b = spec.sigma ? spec.b : 0.0;
    pr.p = spec.p_scale * (*spec.p)[x];
    pr.q = spec.q->data();
    pr.r = spec.r ? (*spec.r)[x] : Complex{};
    pr.s = spec.s ? spec.s->data() : nullptr;
    pr.n = n;
    kern.pair_row(pr, residual.data() + x * n);
  }

  const double best = *std::ranges::max_element(residual);
  const auto hit = std::ranges::find_if(
      residual, [&](double v) { return v >= best - Tolerances{}.witness_tie; });
  const auto at = static_cast<std::size_t>(hit - residual.begin());
  return {spec.equation, best, static_cast<Element>(at / n), static_cast<Element>(at % n)};
}

IdentityResidual max_over_x(const std::string& tag, std::size_t n,
                            const auto& residual_at /* Element -> double */) {
  IdentityResidual out{tag, 0.0, 0};
  for (std::size_t x = 0; x < n; ++x) {
    const double r = residual_at(static_cast<Element>(x));
    if (r > out.residual + Tolerances{}.witness_tie) {
      out.residual = r;
      out.witness = static_cast<Element>(x);
    }
  }
  return out;
}

}  // namespace

const char* to_string(Equation eq) {
  switch (eq) {
    case Equation::Dalembert: return "dalembert";
    case Equation::Kannappan: return "kannappan";
    case Equation::VanVleck: return "vanvleck";
    case Equation::Wilson: return "wilson";
    case Equation::SineAddition: return "sine_addition";
    case Equation::KannappanSigmaId: return "kannappan_sigma_id";
    case Equation::Multiplicative: return "multiplicative";
  }
  return "unknown";
}

Equation equation_from_string(const std::string& s) {
  for (auto eq : {Equation::Dalembert, Equation::Kannappan, Equation::VanVleck, Equation::Wilson,
                  Equation::SineAddition, Equation::KannappanSigmaId, Equation::Multiplicative})
    if (s == to_string(eq)) return eq;
  throw Error(ErrorCode::BadParams, "unknown equation '" + s + "'");
}

DefectReport defect_dalembert(const CFunc& g, const FiniteSemigroup& s,
                              const InvolutiveMorphism& sigma) {
  require_function(g, s);
  return scan(s, {.equation = Equation::Dalembert, .h = &g, .sigma = &sigma, .a = 1.0, .b = 1.0,
                  .p = &g, .p_scale = 2.0, .q = &g});
}

DefectReport defect_kannappan(const CFunc& f, const FiniteSemigroup& s,
                              const InvolutiveMorphism& sigma, const CentralMeasure& mu) {
  require_function(f, s);
  // z_i central: int f(xyt) dmu(t) = h(xy) with h = x -> int f(xt) dmu(t).
  const CFunc h = shifted(s, f, mu);
  return scan(s, {.equation = Equation::Kannappan, .h = &h, .sigma = &sigma, .a = 1.0, .b = 1.0,
                  .p = &f, .p_scale = 2.0, .q = &f});
}

DefectReport defect_vanvleck(const CFunc& f, const FiniteSemigroup& s,
                             const InvolutiveMorphism& sigma, const CentralMeasure& mu) {
  require_function(f, s);
  const CFunc h = shifted(s, f, mu);
  return scan(s, {.equation = Equation::VanVleck, .h = &h, .sigma = &sigma, .a = -1.0, .b = 1.0,
                  .p = &f, .p_scale = 2.0, .q = &f});
}

DefectReport defect_wilson(const CFunc& f, const CFunc& g, const FiniteSemigroup& s,
                           const InvolutiveMorphism& sigma) {
  require_function(f, s);
  require_function(g, s);
  return scan(s, {.equation = Equation::Wilson, .h = &f, .sigma = &sigma, .a = 1.0, .b = 1.0,
                  .p = &f, .p_scale = 2.0, .q = &g});
}

DefectReport defect_sine_addition(const CFunc& f, const CFunc& g, const FiniteSemigroup& s) {
  require_function(f, s);
  require_function(g, s);
  return scan(s, {.equation = Equation::SineAddition, .h = &f, .a = 1.0, .p = &f, .q = &g,
                  .r = &g, .s = &f});
}

DefectReport defect_kannappan_sigma_id(const CFunc& f, const FiniteSemigroup& s,
                                       const CentralMeasure& mu) {
  require_function(f, s);
  const CFunc h = shifted(s, f, mu);
  return scan(s, {.equation = Equation::KannappanSigmaId, .h = &h, .a = 1.0, .p = &f, .q = &f});
}

DefectReport defect_of(Equation eq, const CFunc& f, const FiniteSemigroup& s,
                       const InvolutiveMorphism& sigma, const CentralMeasure& mu) {
  switch (eq) {
    case Equation::Kannappan: return defect_kannappan(f, s, sigma, mu);
    case Equation::VanVleck: return defect_vanvleck(f, s, sigma, mu);
    case Equation::Dalembert: return defect_dalembert(f, s, sigma);
    case Equation::KannappanSigmaId: return defect_kannappan_sigma_id(f, s, mu);
    default: break;
  }
  throw Error(ErrorCode::BadParams, std::string("defect_of does not handle ") + to_string(eq));
}

// Multiplicativity lives here so every pair scan shares one code path.
DefectReport multiplicativity_defect(const CFunc& f, const FiniteSemigroup& s) {
  require_function(f, s);
  return scan(s, {.equation = Equation::Multiplicative, .h = &f, .a = 1.0, .p = &f, .q = &f});
}

bool IdentityReport::passes(double tol) const {
  return std::ranges::all_of(residuals, [&](const auto& r) { return r.residual <= tol; }) &&
         std::ranges::all_of(conditions, [](const auto& c) { return c.holds; });
}

const IdentityResidual& IdentityReport::residual(const std::string& tag) const {
  for (const auto& r : residuals)
    if (r.tag == tag) return r;
  throw Error(ErrorCode::BadParams, "no residual '" + tag + "'");
}

const ConditionCheck& IdentityReport::condition(const std::string& tag) const {
  for (const auto& c : conditions)
    if (c.tag == tag) return c;
  throw Error(ErrorCode::BadParams, "no condition '" + tag + "'");
}

IdentityReport verify_kannappan_identities(const CFunc& f, const FiniteSemigroup& s,
                                           const InvolutiveMorphism& sigma,
                                           const CentralMeasure& mu, const Tolerances& tol) {
  const auto d = defect_kannappan(f, s, sigma, mu);
  if (d.max_defect > tol.identity)
    throw Error(ErrorCode::NotASolution,
                "not a Kannappan solution: defect " + std::to_string(d.max_defect),
                {d.witness_x, d.witness_y});

  const std::size_t n = s.size();
  const Complex mass = integrate(f, mu);
  IdentityReport rep;

  rep.residuals.push_back(max_over_x("sigma_invariance", n, [&](Element x) {
    return std::abs(f(sigma(x)) - f(x));
  }));

  const double sup = f.sup_norm();
  rep.conditions.push_back({"integral_nonzero_iff_nonzero",
                            (std::abs(mass) > tol.nonzero) == (sup > tol.nonzero),
                            {std::abs(mass), sup}});

  rep.residuals.push_back(max_over_x("twisted_double_shift", n, [&](Element x) {
    return std::abs(double_shifted_integrate(s, f, x, mu, &sigma) - f(x) * mass);
  }));
  rep.residuals.push_back(max_over_x("double_shift", n, [&](Element x) {
    return std::abs(double_shifted_integrate(s, f, x, mu) - f(x) * mass);
  }));
  return rep;
}

IdentityReport verify_vanvleck_identities(const CFunc& f, const FiniteSemigroup& s,
                                          const InvolutiveMorphism& sigma,
                                          const CentralMeasure& mu, const Tolerances& tol) {
  require_function(f, s);
  if (f.sup_norm() <= tol.nonzero) throw Error(ErrorCode::ZeroFunction, "f is identically zero");
  const auto d = defect_vanvleck(f, s, sigma, mu);
  if (d.max_defect > tol.identity)
    throw Error(ErrorCode::NotASolution,
                "not a Van Vleck solution: defect " + std::to_string(d.max_defect),
                {d.witness_x, d.witness_y});

  const std::size_t n = s.size();
  const Complex mass = integrate(f, mu);
  IdentityReport rep;

  rep.residuals.push_back(max_over_x("sigma_antiinvariance", n, [&](Element x) {
    return std::abs(f(sigma(x)) + f(x));
  }));
  rep.conditions.push_back({"integral_nonzero", std::abs(mass) > tol.nonzero, {std::abs(mass)}});
  rep.residuals.push_back({"double_integral", std::abs(double_integrate(s, f, mu)), 0});
  rep.residuals.push_back(
      {"twisted_double_integral", std::abs(double_integrate(s, f, mu, &sigma)), 0});
  rep.residuals.push_back(max_over_x("twisted_double_shift", n, [&](Element x) {
    return std::abs(double_shifted_integrate(s, f, x, mu, &sigma) - f(x) * mass);
  }));
  rep.residuals.push_back(max_over_x("double_shift", n, [&](Element x) {
    return std::abs(double_shifted_integrate(s, f, x, mu) + f(x) * mass);
  }));
  rep.residuals.push_back(max_over_x("shift_sigma_invariance", n, [&](Element x) {
    return std::abs(shifted_integrate(s, f, sigma(x), mu) - shifted_integrate(s, f, x, mu));
  }));

  if (std::abs(mass) <= tol.nonzero) return rep;  // g below is undefined

  const CFunc g = shifted(s, f, mu).scaled(1.0 / mass);
  const auto dg = defect_dalembert(g, s, sigma);
  rep.residuals.push_back({"g_dalembert", dg.max_defect, dg.witness_x});
  rep.conditions.push_back({"g_nonzero", g.sup_norm() > tol.nonzero, {g.sup_norm()}});
  rep.residuals.push_back({"g_integral", std::abs(integrate(g, mu)), 0});
  const double gg = std::abs(double_integrate(s, g, mu));
  rep.conditions.push_back({"g_double_integral_nonzero", gg > tol.nonzero, {gg}});
  return rep;
}

}  // namespace feqlab
