#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feqlab/algebra.hpp"
#include "feqlab/characters.hpp"
#include "feqlab/common.hpp"
#include "feqlab/measure.hpp"

namespace feqlab {

/// A: d'Alembert solutions g with int g != 0 and int g(xt) = g(x) int g.
/// B: d'Alembert solutions g with int g = 0 and int int g(st) != 0.
/// K: nonzero Kannappan solutions.  V: nonzero Van Vleck solutions.
/// D: character-built d'Alembert solutions before any class filter.
enum class SolutionClass { A, B, K, V, D };

const char* to_string(SolutionClass c);

struct Provenance {
  std::string rule;
  std::vector<std::size_t> characters;  // indices into enumerate_characters(S)
  std::optional<Complex> integral;          // int chi dmu
  std::optional<Complex> twisted_integral;  // int chi o sigma dmu
};

struct SolutionMember {
  CFunc values;
  Provenance provenance;
};

struct SolutionSet {
  SolutionClass cls = SolutionClass::K;
  std::vector<SolutionMember> members;
  /// True when the semigroup is not commutative, so the list holds the central solutions only.
  bool central_only = false;

  std::size_t size() const noexcept { return members.size(); }
  /// Index of the member within tol of f (max-norm), if any.
  std::optional<std::size_t> find(const CFunc& f, double tol) const;
};

/// g -> (int g dmu) g
CFunc lift_to_kannappan(const CFunc& g, const CentralMeasure& mu);

/// f -> x -> int f(xt) dmu(t) / int f dmu, inverse of lift_to_kannappan on K.
/// Throws DegenerateIntegral when |int f dmu| <= nonzero_tol.
CFunc kannappan_to_dalembert(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu,
                             double nonzero_tol = Tolerances{}.nonzero);

/// Same formula on the Van Vleck side: V -> B.
CFunc vanvleck_to_dalembert(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu,
                            double nonzero_tol = Tolerances{}.nonzero);

/// g in B -> f(x) = sum_i c_i g(x sigma(z_i)); the inverse of vanvleck_to_dalembert.
/// Throws NotInClassB naming the failed condition.
CFunc lift_to_vanvleck(const CFunc& g, const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                       const CentralMeasure& mu, const Tolerances& tol = {});

struct ClassCheck {
  std::string name;
  double value = 0.0;
  bool pass = false;
};

struct ClassReport {
  bool member = false;
  std::vector<ClassCheck> checks;
};

ClassReport in_class_a(const CFunc& g, const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                       const CentralMeasure& mu, const Tolerances& tol = {});
ClassReport in_class_b(const CFunc& g, const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                       const CentralMeasure& mu, const Tolerances& tol = {});

/// { (chi + chi o sigma) / 2 : chi a character }, each re-verified against the d'Alembert defect.
SolutionSet enumerate_dalembert_abelian(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                                        const Tolerances& tol = {});

/// Character-built Kannappan solutions ((chi + chi o sigma) / 2) int chi dmu over the
/// characters with int chi dmu != 0 and int chi o sigma dmu = int chi dmu.
/// Throws ConstructedNonSolution if a constructed member fails verification.
SolutionSet enumerate_kannappan(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                                const CentralMeasure& mu, const Tolerances& tol = {});

/// Character-built Van Vleck solutions ((chi - chi o sigma) / 2) int chi o sigma dmu over the
/// characters with int chi dmu != 0 and int chi o sigma dmu = -int chi dmu.
SolutionSet enumerate_vanvleck(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                               const CentralMeasure& mu, const Tolerances& tol = {});

/// Members of a d'Alembert set passing the class A (or B) predicate.
SolutionSet filter_class(const SolutionSet& dalembert, SolutionClass target,
                         const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                         const CentralMeasure& mu, const Tolerances& tol = {});

enum class Correspondence { KannappanA, VanVleckB };

struct BijectionReport {
  Correspondence which = Correspondence::KannappanA;
  std::size_t domain_size = 0;    // |A| or |V|
  std::size_t codomain_size = 0;  // |K| or |B|
  double max_roundtrip_error = 0.0;
};

/// Checks that A -> K (or V -> B) maps each set into the other, that the
/// round trips are pointwise identities and that the sets have equal size.
/// Throws BijectionViolation describing the offending function and stage.
BijectionReport verify_bijection(const FiniteSemigroup& s, const InvolutiveMorphism& sigma,
                                 const CentralMeasure& mu, Correspondence which,
                                 const Tolerances& tol = {});

}  // namespace feqlab
