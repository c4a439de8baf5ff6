#pragma once

#include <optional>
#include <span>
#include <vector>

#include "feqlab/algebra.hpp"
#include "feqlab/common.hpp"

namespace feqlab {

struct Atom {
  Element z = 0;
  Complex c;
};

/// mu = sum_i c_i delta_{z_i} with every z_i central. Atoms are sorted by element.
class CentralMeasure {
 public:
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  /// sum_i |c_i|
  double norm() const noexcept { return norm_; }
  /// sum_i c_i
  Complex total() const;
  std::size_t semigroup_size() const noexcept { return n_; }

 private:
  friend CentralMeasure validate_measure(const FiniteSemigroup&, std::span<const Atom>, double);
  CentralMeasure() = default;

  std::vector<Atom> atoms_;
  double norm_ = 0.0;
  std::size_t n_ = 0;
};

CentralMeasure validate_measure(const FiniteSemigroup& s, std::span<const Atom> atoms,
                                double nonzero_tol = Tolerances{}.nonzero);

/// delta_z
CentralMeasure dirac(const FiniteSemigroup& s, Element z);

/// sum_i c_i f(z_i)
Complex integrate(const CFunc& f, const CentralMeasure& mu);

/// sum_i c_i f(x z_i)
Complex shifted_integrate(const FiniteSemigroup& s, const CFunc& f, Element x,
                          const CentralMeasure& mu);

/// x -> sum_i c_i f(x z_i), for every x at once.
CFunc shifted(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu);

/// sum_i sum_j c_i c_j f(x tau(z_i) z_j) with tau the twist, or the identity when absent.
Complex double_shifted_integrate(const FiniteSemigroup& s, const CFunc& f, Element x,
                                 const CentralMeasure& mu,
                                 const InvolutiveMorphism* first_twist = nullptr);

/// sum_i sum_j c_i c_j f(tau(z_i) z_j)
Complex double_integrate(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu,
                         const InvolutiveMorphism* first_twist = nullptr);

/// x -> f(sigma(x))
CFunc compose(const CFunc& f, const InvolutiveMorphism& sigma);

}  // namespace feqlab
