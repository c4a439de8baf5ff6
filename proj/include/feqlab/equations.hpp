#pragma once

#include <string>
#include <vector>

#include "feqlab/algebra.hpp"
#include "feqlab/common.hpp"

namespace feqlab {

class CentralMeasure;

enum class Equation {
  Dalembert,         // g(xy) + g(x sigma(y)) = 2 g(x) g(y)
  Kannappan,         // int f(xyt) + int f(x sigma(y) t) = 2 f(x) f(y)
  VanVleck,          // int f(x sigma(y) t) - int f(xyt) = 2 f(x) f(y)
  Wilson,            // f(xy) + f(x sigma(y)) = 2 f(x) g(y)
  SineAddition,      // f(xy) = f(x) g(y) + f(y) g(x)
  KannappanSigmaId,  // int f(xyt) = f(x) f(y)
  Multiplicative,    // f(xy) = f(x) f(y)
};

const char* to_string(Equation eq);
Equation equation_from_string(const std::string& s);

/// Largest residual over all pairs (x, y), with the lexicographically first
/// pair attaining it (within the witness tie tolerance).
struct DefectReport {
  Equation equation = Equation::Dalembert;
  double max_defect = 0.0;
  Element witness_x = 0;
  Element witness_y = 0;
};

DefectReport defect_dalembert(const CFunc& g, const FiniteSemigroup& s,
                              const InvolutiveMorphism& sigma);
DefectReport defect_kannappan(const CFunc& f, const FiniteSemigroup& s,
                              const InvolutiveMorphism& sigma, const CentralMeasure& mu);
DefectReport defect_vanvleck(const CFunc& f, const FiniteSemigroup& s,
                             const InvolutiveMorphism& sigma, const CentralMeasure& mu);
DefectReport defect_wilson(const CFunc& f, const CFunc& g, const FiniteSemigroup& s,
                           const InvolutiveMorphism& sigma);
DefectReport defect_sine_addition(const CFunc& f, const CFunc& g, const FiniteSemigroup& s);
DefectReport defect_kannappan_sigma_id(const CFunc& f, const FiniteSemigroup& s,
                                       const CentralMeasure& mu);

/// Kannappan or Van Vleck defect, chosen by tag.
DefectReport defect_of(Equation eq, const CFunc& f, const FiniteSemigroup& s,
                       const InvolutiveMorphism& sigma, const CentralMeasure& mu);

struct IdentityResidual {
  std::string tag;
  double residual = 0.0;
  Element witness = 0;
};

/// A logical condition (e.g. "integral is nonzero") with the magnitudes it was decided on.
struct ConditionCheck {
  std::string tag;
  bool holds = false;
  std::vector<double> magnitudes;
};

struct IdentityReport {
  std::vector<IdentityResidual> residuals;
  std::vector<ConditionCheck> conditions;

  bool passes(double tol) const;
  const IdentityResidual& residual(const std::string& tag) const;
  const ConditionCheck& condition(const std::string& tag) const;
};

/// Identities every Kannappan solution satisfies:
///   f o sigma = f;
///   int f dmu != 0  <=>  f != 0;
///   int int f(x sigma(t) s) = f(x) int f;
///   int int f(x t s)        = f(x) int f.
/// Throws NotASolution if f is not a solution within tol.identity.
IdentityReport verify_kannappan_identities(const CFunc& f, const FiniteSemigroup& s,
                                           const InvolutiveMorphism& sigma,
                                           const CentralMeasure& mu, const Tolerances& tol = {});

/// Identities every nonzero Van Vleck solution satisfies, plus the three
/// conditions placing g = int f(xt) / int f in the d'Alembert class with
/// vanishing integral. Throws ZeroFunction or NotASolution.
IdentityReport verify_vanvleck_identities(const CFunc& f, const FiniteSemigroup& s,
                                          const InvolutiveMorphism& sigma,
                                          const CentralMeasure& mu, const Tolerances& tol = {});

}  // namespace feqlab
