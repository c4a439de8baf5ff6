#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feqlab/algebra.hpp"
#include "feqlab/common.hpp"
#include "feqlab/equations.hpp"
#include "feqlab/measure.hpp"

namespace feqlab {

struct StabilityConfig {
  Equation equation = Equation::Kannappan;  // Kannappan or VanVleck
  double delta = 0.0;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t max_iters = 2000;
  double step = 0.1;
  Tolerances tol;
};

/// Throws BadConfig for an unsupported equation, delta < 0 or zero samples.
void validate_config(const StabilityConfig& cfg);

/// (|mu| + sqrt(|mu|^2 + 2 delta)) / 2. Throws NegativeDelta or BadParams.
double stability_bound(double delta, double mu_norm);

struct Violation {
  std::size_t sample = 0;
  CFunc f;
  double defect = 0.0;
  double supnorm = 0.0;
};

struct ScanReport {
  std::size_t tested = 0;    // admitted samples (defect <= delta + 1e-12)
  std::size_t rejected = 0;  // samples that never met the defect budget
  double bound = 0.0;
  double best_supnorm = 0.0;
  std::vector<Violation> violations;
};

/// Draws cfg.samples functions (perturbed exact solutions, constants on a grid,
/// random boxes), keeps those with defect <= delta and records every one whose
/// sup-norm exceeds the bound by more than tol.identity.
/// Sample i is drawn from its own generator seeded by (seed, i).
ScanReport superstability_scan(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                               const CentralMeasure& mu, const StabilityConfig& cfg);

struct FalsifyResult {
  CFunc best;
  double best_supnorm = 0.0;
  double best_defect = 0.0;
  double bound = 0.0;
  std::size_t starts = 0;
};

/// Hill climb on sup-norm under the constraint defect <= delta, from exact
/// solutions, constants and random points.
FalsifyResult falsify_bound(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                            const CentralMeasure& mu, const StabilityConfig& cfg);

struct Inequality {
  std::string tag;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct DiagnosticsReport {
  Equation equation = Equation::Kannappan;
  double delta = 0.0;  // measured defect of f
  double mu_norm = 0.0;
  Complex integral;
  std::vector<Inequality> inequalities;

  bool all_pass() const;
};

/// Evaluates the defect inequalities for f with delta set to the measured
/// defect. Requires f o sigma = f (Kannappan) or f o sigma = -f (Van Vleck)
/// and |int f dmu| > tol.nonzero; throws SymmetryViolated or DegenerateIntegral.
DiagnosticsReport stability_diagnostics(const CFunc& f, const FiniteSemigroup& s,
                                        const InvolutiveMorphism& sigma, const CentralMeasure& mu,
                                        Equation equation, const Tolerances& tol = {});

struct MinimizeResult {
  CFunc f;
  double defect = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Levenberg-Marquardt on the sum of squared pair residuals of the Kannappan
/// or Van Vleck equation, started from `start`.
MinimizeResult minimize_defect(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                               const CentralMeasure& mu, Equation equation, const CFunc& start,
                               std::size_t max_iters = 200);

/// seed -> per-sample seed
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace feqlab
