#include "feqlab/solutions.hpp"

#include <algorithm>
#include <cmath>

#include "feqlab/equations.hpp"

namespace feqlab {

namespace {

struct Candidate {
  CFunc values;
  Provenance provenance;
};

// Canonical sort, then a sequential merge of members closer than the dedup tolerance.
std::vector<SolutionMember> dedupe(std::vector<Candidate> candidates, double tol) {
  std::ranges::stable_sort(candidates, [](const Candidate& a, const Candidate& b) {
    return canonical_less(a.values, b.values);
  });
  std::vector<SolutionMember> out;
  for (auto& c : candidates) {
    auto it = std::ranges::find_if(
        out, [&](const SolutionMember& m) { return max_distance(m.values, c.values) <= tol; });
    if (it == out.end()) {
      out.push_back({std::move(c.values), std::move(c.provenance)});
    } else {
      auto& ids = it->provenance.characters;
      ids.insert(ids.end(), c.provenance.characters.begin(), c.provenance.characters.end());
    }
  }
  return out;
}

CFunc normalized_shift(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu,
                       double nonzero_tol) {
  const Complex mass = integrate(f, mu);
  if (std::abs(mass) <= nonzero_tol)
    throw Error(ErrorCode::DegenerateIntegral,
                "integral of f against mu vanishes (|int f dmu| = " + std::to_string(std::abs(mass)) + ")");
  return shifted(s, f, mu).scaled(1.0 / mass);
}

double shift_condition_residual(const FiniteSemigroup& s, const CFunc& g, const CentralMeasure& mu) {
  const Complex mass = integrate(g, mu);
  const CFunc h = shifted(s, g, mu);
  double worst = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) worst = std::max(worst, std::abs(h[x] - g[x] * mass));
  return worst;
}

[[noreturn]] void violation(const std::string& stage, const CFunc& f) {
  std::string msg = "bijection violated at stage '" + stage + "' by f = [";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) msg += ", ";
    msg += "(" + std::to_string(f[i].real()) + "," + std::to_string(f[i].imag()) + ")";
  }
  throw Error(ErrorCode::BijectionViolation, msg + "]");
}

}  // namespace

const char* to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::A: return "A";
    case SolutionClass::B: return "B";
    case SolutionClass::K: return "K";
    case SolutionClass::V: return "V";
    case SolutionClass::D: return "D";
  }
  return "?";
}

std::optional<std::size_t> SolutionSet::find(const CFunc& f, double tol) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (max_distance(members[i].values, f) <= tol) return i;
  return std::nullopt;
}

CFunc lift_to_kannappan(const CFunc& g, const CentralMeasure& mu) {
  return g.scaled(integrate(g, mu));
}

CFunc kannappan_to_dalembert(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu,
                             double nonzero_tol) {
  return normalized_shift(s, f, mu, nonzero_tol);
}

CFunc vanvleck_to_dalembert(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu,
                            double nonzero_tol) {
  return normalized_shift(s, f, mu, nonzero_tol);
}

CFunc lift_to_vanvleck(const CFunc& g, const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                       const CentralMeasure& mu, const Tolerances& tol) {
  const auto report = in_class_b(g, s, sigma, mu, tol);
  for (const auto& c : report.checks)
    if (!c.pass)
      throw Error(ErrorCode::NotInClassB,
                  "g is not in class B: check '" + c.name + "' failed (value " +
                      std::to_string(c.value) + ")");
  CFunc f(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    Complex acc{};
    for (const auto& a : mu.atoms()) acc += a.c * g(s.op(static_cast<Element>(x), sigma(a.z)));
    f[x] = acc;
  }
  return f;
}

ClassReport in_class_a(const CFunc& g, const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                       const CentralMeasure& mu, const Tolerances& tol) {
  ClassReport r;
  const double d = defect_dalembert(g, s, sigma).max_defect;
  const double mass = std::abs(integrate(g, mu));
  const double shift = shift_condition_residual(s, g, mu);
  r.checks = {{"dalembert_defect", d, d <= tol.identity},
              {"integral", mass, mass > tol.nonzero},
              {"shift_condition", shift, shift <= tol.identity}};
  r.member = std::ranges::all_of(r.checks, &ClassCheck::pass);
  return r;
}

ClassReport in_class_b(const CFunc& g, const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                       const CentralMeasure& mu, const Tolerances& tol) {
  ClassReport r;
  const double d = defect_dalembert(g, s, sigma).max_defect;
  const double mass = std::abs(integrate(g, mu));
  const double dd = std::abs(double_integrate(s, g, mu));
  r.checks = {{"dalembert_defect", d, d <= tol.identity},
              {"integral", mass, mass <= tol.nonzero},
              {"double_integral", dd, dd > tol.nonzero}};
  r.member = std::ranges::all_of(r.checks, &ClassCheck::pass);
  return r;
}

SolutionSet enumerate_dalembert_abelian(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                                        const Tolerances& tol) {
  const auto chars = enumerate_characters(s);
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const CFunc& chi = chars[i].values;
    CFunc g = (chi + compose(chi, sigma)).scaled(0.5);
    if (g.sup_norm() <= tol.nonzero) continue;
    candidates.push_back({std::move(g), {"(chi + chi o sigma) / 2", {i}, {}, {}}});
  }
  SolutionSet out{SolutionClass::D, dedupe(std::move(candidates), tol.dedup), !s.is_commutative()};
  for (const auto& m : out.members) {
    const auto d = defect_dalembert(m.values, s, sigma);
    if (d.max_defect > tol.identity)
      throw Error(ErrorCode::ConstructedNonSolution,
                  "constructed d'Alembert candidate has defect " + std::to_string(d.max_defect),
                  {d.witness_x, d.witness_y});
  }
  return out;
}

SolutionSet filter_class(const SolutionSet& dalembert, SolutionClass target,
                         const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                         const CentralMeasure& mu, const Tolerances& tol) {
  if (target != SolutionClass::A && target != SolutionClass::B)
    throw Error(ErrorCode::BadParams, "filter_class expects class A or B");
  SolutionSet out{target, {}, dalembert.central_only};
  for (const auto& m : dalembert.members) {
    const auto rep = target == SolutionClass::A ? in_class_a(m.values, s, sigma, mu, tol)
                                                : in_class_b(m.values, s, sigma, mu, tol);
    if (rep.member) out.members.push_back(m);
  }
  return out;
}

SolutionSet enumerate_kannappan(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                                const CentralMeasure& mu, const Tolerances& tol) {
  const auto chars = enumerate_characters(s);
  const std::string rule = sigma.is_identity() ? "chi * int chi dmu"
                                               : "((chi + chi o sigma) / 2) * int chi dmu";
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const CFunc& chi = chars[i].values;
    const CFunc chi_sigma = compose(chi, sigma);
    const Complex m = integrate(chi, mu), ms = integrate(chi_sigma, mu);
    if (std::abs(m) <= tol.nonzero || std::abs(ms - m) > tol.identity) continue;
    candidates.push_back({(chi + chi_sigma).scaled(0.5 * m), {rule, {i}, m, ms}});
  }
  SolutionSet out{SolutionClass::K, dedupe(std::move(candidates), tol.dedup), !s.is_commutative()};
  for (const auto& mem : out.members) {
    const auto d = defect_kannappan(mem.values, s, sigma, mu);
    if (d.max_defect > tol.identity || mem.values.sup_norm() <= tol.nonzero)
      throw Error(ErrorCode::ConstructedNonSolution,
                  "constructed Kannappan candidate has defect " + std::to_string(d.max_defect),
                  {d.witness_x, d.witness_y});
  }
  return out;
}

SolutionSet enumerate_vanvleck(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                               const CentralMeasure& mu, const Tolerances& tol) {
  const auto chars = enumerate_characters(s);
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const CFunc& chi = chars[i].values;
    const CFunc chi_sigma = compose(chi, sigma);
    const Complex m = integrate(chi, mu), ms = integrate(chi_sigma, mu);
    if (std::abs(m) <= tol.nonzero || std::abs(ms + m) > tol.identity) continue;
    CFunc f = (chi - chi_sigma).scaled(0.5 * ms);
    if (f.sup_norm() <= tol.nonzero) continue;
    candidates.push_back({std::move(f), {"((chi - chi o sigma) / 2) * int chi o sigma dmu", {i}, m, ms}});
  }
  SolutionSet out{SolutionClass::V, dedupe(std::move(candidates), tol.dedup), !s.is_commutative()};
  for (const auto& mem : out.members) {
    const auto d = defect_vanvleck(mem.values, s, sigma, mu);
    if (d.max_defect > tol.identity)
      throw Error(ErrorCode::ConstructedNonSolution,
                  "constructed Van Vleck candidate has defect " + std::to_string(d.max_defect),
                  {d.witness_x, d.witness_y});
  }
  return out;
}

BijectionReport verify_bijection(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                                 const CentralMeasure& mu, Correspondence which,
                                 const Tolerances& tol) {
  const auto dal = enumerate_dalembert_abelian(s, sigma, tol);
  BijectionReport rep{which, 0, 0, 0.0};
  const auto track = [&](double err, const std::string& stage, const CFunc& f) {
    rep.max_roundtrip_error = std::max(rep.max_roundtrip_error, err);
    if (err > tol.identity) violation(stage, f);
  };

  if (which == Correspondence::KannappanA) {
    const auto a = filter_class(dal, SolutionClass::A, s, sigma, mu, tol);
    const auto k = enumerate_kannappan(s, sigma, mu, tol);
    rep.domain_size = a.size();
    rep.codomain_size = k.size();
    for (const auto& m : a.members) {
      const CFunc f = lift_to_kannappan(m.values, mu);
      if (!k.find(f, tol.dedup)) violation("forward image not in K", m.values);
      track(max_distance(kannappan_to_dalembert(s, f, mu, tol.nonzero), m.values),
            "inverse after forward", m.values);
    }
    for (const auto& m : k.members) {
      const CFunc g = kannappan_to_dalembert(s, m.values, mu, tol.nonzero);
      if (!a.find(g, tol.dedup)) violation("inverse image not in A", m.values);
      track(max_distance(lift_to_kannappan(g, mu), m.values), "forward after inverse", m.values);
    }
  } else {
    const auto b = filter_class(dal, SolutionClass::B, s, sigma, mu, tol);
    const auto v = enumerate_vanvleck(s, sigma, mu, tol);
    rep.domain_size = v.size();
    rep.codomain_size = b.size();
    for (const auto& m : v.members) {
      const CFunc g = vanvleck_to_dalembert(s, m.values, mu, tol.nonzero);
      if (!b.find(g, tol.dedup)) violation("forward image not in B", m.values);
      track(max_distance(lift_to_vanvleck(g, s, sigma, mu, tol), m.values),
            "lift after forward", m.values);
    }
    for (const auto& m : b.members) {
      const CFunc f = lift_to_vanvleck(m.values, s, sigma, mu, tol);
      if (!v.find(f, tol.dedup)) violation("lift not in V", m.values);
      track(max_distance(vanvleck_to_dalembert(s, f, mu, tol.nonzero), m.values),
            "forward after lift", m.values);
    }
  }
  if (rep.domain_size != rep.codomain_size)
    throw Error(ErrorCode::BijectionViolation,
                "cardinality mismatch: " + std::to_string(rep.domain_size) + " vs " +
                    std::to_string(rep.codomain_size));
  return rep;
}

}  // namespace feqlab
