#include "feqlab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "feqlab/solutions.hpp"

namespace feqlab {

namespace {

constexpr int kMaxRetries = 100;
constexpr int kBisectSteps = 80;
constexpr double kRoundoffSlack = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Complex gaussian(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  const double re = n(rng);
  return {re, n(rng)};
}

struct Problem {
  const FiniteSemigroup& s;
  const InvolutiveMorphism& sigma;
  const CentralMeasure& mu;
  const StabilityConfig& cfg;

  double defect(const CFunc& f) const { return defect_of(cfg.equation, f, s, sigma, mu).max_defect; }
  // Enumerated solutions carry roundoff, so delta = 0 needs a little room.
  bool admits(double d) const { return d <= cfg.delta + kRoundoffSlack; }
  bool feasible(const CFunc& f) const { return admits(defect(f)); }

  std::vector<CFunc> exact_solutions() const {
    const auto set = cfg.equation == Equation::Kannappan ? enumerate_kannappan(s, sigma, mu, cfg.tol)
                                                         : enumerate_vanvleck(s, sigma, mu, cfg.tol);
    std::vector<CFunc> out{CFunc(s.size())};
    for (const auto& m : set.members) out.push_back(m.values);
    return out;
  }

  // Largest t in [lo, hi] with t * f feasible, given lo feasible and hi not.
  double bisect_scale(const CFunc& f, double lo, double hi) const {
    for (int i = 0; i < kBisectSteps && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      (feasible(f.scaled(mid)) ? lo : hi) = mid;
    }
    return lo;
  }

  // Scales f outward until the defect budget is exhausted.
  CFunc push_to_boundary(const CFunc& f) const {
    if (f.sup_norm() == 0.0) return f;
    double hi = 2.0;
    while (feasible(f.scaled(hi)) && hi < 1e6) hi *= 2.0;
    if (feasible(f.scaled(hi))) return f.scaled(hi);
    return f.scaled(bisect_scale(f, 1.0, hi));
  }
};

enum class SampleKind { Perturbed, Constant, Box };

SampleKind kind_of(std::size_t index) {
  switch (index % 5) {
    case 0:
    case 1: return SampleKind::Perturbed;
    case 2:
    case 3: return SampleKind::Constant;
    default: return SampleKind::Box;
  }
}

// Number of constant samples among indices [0, samples).
std::size_t constant_count(std::size_t samples) {
  const std::size_t full = samples / 5, rest = samples % 5;
  return 2 * full + (rest > 3 ? 2 : rest > 2 ? 1 : 0);
}

struct SampleOutcome {
  bool admitted = false;
  CFunc f;
  double defect = 0.0;
  double supnorm = 0.0;
};

SampleOutcome draw_sample(const Problem& pb, const std::vector<CFunc>& exact, double bound,
                          std::size_t index) {
  const std::size_t n = pb.s.size();
  std::mt19937_64 rng(derive_seed(pb.cfg.seed, index));
  SampleOutcome out;

  auto accept = [&](CFunc f, double d) {
    out.admitted = true;
    out.supnorm = f.sup_norm();
    out.f = std::move(f);
    out.defect = d;
  };

  switch (kind_of(index)) {
    case SampleKind::Perturbed: {
      std::uniform_int_distribution<std::size_t> pick(0, exact.size() - 1);
      const CFunc& base = exact[pick(rng)];
      // Noise halves on each retry, so tight budgets still admit near-exact points.
      double scale = pb.cfg.step;
      for (int attempt = 0; attempt < kMaxRetries; ++attempt, scale *= 0.5) {
        CFunc f = base;
        for (std::size_t x = 0; x < n; ++x) f[x] += gaussian(rng, scale);
        if (const double d = pb.defect(f); pb.admits(d)) return accept(std::move(f), d), out;
      }
      return out;
    }
    case SampleKind::Constant: {
      const std::size_t count = constant_count(pb.cfg.samples);
      const std::size_t rank = 2 * (index / 5) + (index % 5 - 2);
      const double top = bound + 0.5;
      const double step = count > 1 ? top / static_cast<double>(count - 1) : 0.0;
      const double c = step * static_cast<double>(rank);
      const CFunc one = CFunc::constant(n, 1.0);
      CFunc f = one.scaled(c);
      if (const double d = pb.defect(f); pb.admits(d)) return accept(std::move(f), d), out;
      // Predecessor on the grid admitted: the feasibility boundary lies in between.
      const double prev = c - step;
      if (rank == 0 || !pb.feasible(one.scaled(prev))) return out;
      f = one.scaled(pb.bisect_scale(one, prev, c));
      const double d = pb.defect(f);
      return accept(std::move(f), d), out;
    }
    case SampleKind::Box: {
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      std::uniform_real_distribution<double> radius(0.0, bound + 0.5);
      for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const double r = radius(rng);
        CFunc f(n);
        for (std::size_t x = 0; x < n; ++x) {
          const double re = unit(rng);
          f[x] = r * Complex(re, unit(rng));
        }
        if (const double d = pb.defect(f); pb.admits(d)) return accept(std::move(f), d), out;
      }
      return out;
    }
  }
  return out;
}

std::size_t worker_count(std::size_t jobs) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  return std::clamp<std::size_t>(jobs / 256, 1, hw);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

void validate_config(const StabilityConfig& cfg) {
  if (cfg.equation != Equation::Kannappan && cfg.equation != Equation::VanVleck)
    throw Error(ErrorCode::BadConfig,
                std::string("stability supports kannappan and vanvleck, not ") + to_string(cfg.equation));
  if (!(cfg.delta >= 0.0) || !std::isfinite(cfg.delta))
    throw Error(ErrorCode::BadConfig, "delta must be a finite value >= 0");
  if (cfg.samples == 0) throw Error(ErrorCode::BadConfig, "samples must be >= 1");
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step))
    throw Error(ErrorCode::BadConfig, "step must be positive");
}

double stability_bound(double delta, double mu_norm) {
  if (delta < 0.0) throw Error(ErrorCode::NegativeDelta, "delta must be >= 0");
  if (!(mu_norm > 0.0)) throw Error(ErrorCode::BadParams, "measure norm must be positive");
  return (mu_norm + std::sqrt(mu_norm * mu_norm + 2.0 * delta)) / 2.0;
}

ScanReport superstability_scan(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                               const CentralMeasure& mu, const StabilityConfig& cfg) {
  validate_config(cfg);
  const Problem pb{s, sigma, mu, cfg};
  const auto exact = pb.exact_solutions();

  ScanReport rep;
  rep.bound = stability_bound(cfg.delta, mu.norm());

  std::vector<SampleOutcome> outcomes(cfg.samples);
  const std::size_t workers = worker_count(cfg.samples);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < cfg.samples; i += workers)
          outcomes[i] = draw_sample(pb, exact, rep.bound, i);
      });
  }

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (!o.admitted) {
      ++rep.rejected;
      continue;
    }
    ++rep.tested;
    rep.best_supnorm = std::max(rep.best_supnorm, o.supnorm);
    if (o.supnorm > rep.bound + cfg.tol.identity)
      rep.violations.push_back({i, std::move(o.f), o.defect, o.supnorm});
  }
  return rep;
}

FalsifyResult falsify_bound(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                            const CentralMeasure& mu, const StabilityConfig& cfg) {
  validate_config(cfg);
  const Problem pb{s, sigma, mu, cfg};
  const std::size_t n = s.size();

  FalsifyResult res;
  res.bound = stability_bound(cfg.delta, mu.norm());

  std::vector<CFunc> starts = pb.exact_solutions();
  for (int k = 1; k <= 8; ++k)
    starts.push_back(CFunc::constant(n, res.bound * k / 8.0));
  std::mt19937_64 seeder(derive_seed(cfg.seed, 0));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int k = 0; k < 8; ++k) {
    CFunc f(n);
    for (std::size_t x = 0; x < n; ++x) {
      const double re = unit(seeder);
      f[x] = 0.5 * res.bound * Complex(re, unit(seeder));
    }
    starts.push_back(std::move(f));
  }

  res.best = CFunc(n);
  res.best_defect = pb.defect(res.best);

  for (std::size_t k = 0; k < starts.size(); ++k) {
    CFunc cur = starts[k];
    // Infeasible random starts are pulled toward zero, which is always feasible.
    for (int i = 0; i < 60 && !pb.feasible(cur); ++i) cur = cur.scaled(0.5);
    if (!pb.feasible(cur)) continue;
    ++res.starts;
    cur = pb.push_to_boundary(cur);
    double cur_sup = cur.sup_norm(), cur_def = pb.defect(cur);

    std::mt19937_64 rng(derive_seed(cfg.seed, k + 1));
    std::uniform_int_distribution<std::size_t> coord(0, n - 1);
    std::uniform_int_distribution<int> move(0, 2);
    std::normal_distribution<double> normal(0.0, 1.0);
    double step = cfg.step;

    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
      CFunc cand = cur;
      switch (move(rng)) {
        case 0: cand[coord(rng)] += gaussian(rng, step); break;
        case 1: cand = cur.scaled(1.0 + step * normal(rng)); break;
        default:
          for (std::size_t x = 0; x < n; ++x) cand[x] += gaussian(rng, step / 4.0);
      }
      const double d = pb.defect(cand);
      const double sup = cand.sup_norm();
      const bool better = sup > cur_sup || (sup == cur_sup && d < cur_def);
      if (pb.admits(d) && better) {
        cur = std::move(cand);
        cur_sup = sup;
        cur_def = d;
        step = std::min(step * 1.5, 1.0);
      } else {
        step = std::max(step * 0.97, 1e-12);
      }
    }

    if (cur_sup > res.best_supnorm) {
      res.best = cur;
      res.best_supnorm = cur_sup;
      res.best_defect = cur_def;
    }
  }
  return res;
}

bool DiagnosticsReport::all_pass() const {
  return std::ranges::all_of(inequalities, &Inequality::pass);
}

DiagnosticsReport stability_diagnostics(const CFunc& f, const FiniteSemigroup& s,
                                        const InvolutiveMorphism& sigma, const CentralMeasure& mu,
                                        Equation equation, const Tolerances& tol) {
  if (equation != Equation::Kannappan && equation != Equation::VanVleck)
    throw Error(ErrorCode::BadParams, "diagnostics support kannappan and vanvleck");
  const bool kannappan = equation == Equation::Kannappan;
  const double sign = kannappan ? 1.0 : -1.0;
  const std::size_t n = s.size();

  const auto dr = defect_of(equation, f, s, sigma, mu);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    if (std::abs(f(sigma(e)) - sign * f(e)) > tol.identity)
      throw Error(ErrorCode::SymmetryViolated,
                  kannappan ? "f o sigma != f" : "f o sigma != -f", {static_cast<std::int64_t>(x)});
  }

  DiagnosticsReport rep;
  rep.equation = equation;
  rep.delta = dr.max_defect;
  rep.mu_norm = mu.norm();
  rep.integral = integrate(f, mu);
  const double m = std::abs(rep.integral);
  if (m <= tol.nonzero)
    throw Error(ErrorCode::DegenerateIntegral, "int f dmu vanishes; g is undefined");

  const double d = rep.delta, nu = rep.mu_norm;
  auto add = [&](std::string tag, double lhs, double rhs) {
    rep.inequalities.push_back({std::move(tag), lhs, rhs, lhs <= rhs + tol.identity});
  };
  auto max_x = [&](auto&& term) {
    double worst = 0.0;
    for (std::size_t x = 0; x < n; ++x) worst = std::max(worst, term(static_cast<Element>(x)));
    return worst;
  };

  add("twisted_double_shift", max_x([&](Element x) {
        return std::abs(double_shifted_integrate(s, f, x, mu, &sigma) - f(x) * rep.integral);
      }),
      d * nu / 2.0);
  add("double_shift", max_x([&](Element x) {
        return std::abs(double_shifted_integrate(s, f, x, mu) - sign * f(x) * rep.integral);
      }),
      1.5 * d * nu);

  const CFunc h = shifted(s, f, mu);
  const CFunc g = h.scaled(1.0 / rep.integral);
  if (!kannappan)
    add("shift_sigma_invariance",
        max_x([&](Element x) { return std::abs(h(x) - h(sigma(x))); }), 4.0 * d * nu * nu / m);

  add("g_dalembert", defect_dalembert(g, s, sigma).max_defect, 3.0 * d * nu * nu / (m * m));

  if (kannappan) {
    const Complex gm = integrate(g, mu);
    const CFunc gh = shifted(s, g, mu);
    add("g_shift_condition", max_x([&](Element x) { return std::abs(gh(x) - g(x) * gm); }),
        (1.25 * d * nu * nu * nu + 0.25 * d * nu * nu) / (m * m) + d * nu / m);
    add("wilson", defect_wilson(f, g, s, sigma).max_defect, 3.0 * d * nu / m);
  }
  return rep;
}

}  // namespace feqlab
