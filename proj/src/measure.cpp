#include "feqlab/measure.hpp"

#include <algorithm>
#include <cmath>

#include "feqlab/kernels.hpp"

namespace feqlab {

namespace {

void check_size(const FiniteSemigroup& s, const CFunc& f) {
  if (f.size() != s.size())
    throw Error(ErrorCode::SizeMismatch, "function size " + std::to_string(f.size()) +
                                             " does not match semigroup size " +
                                             std::to_string(s.size()));
}

}  // namespace

Complex CentralMeasure::total() const {
  Complex t{};
  for (const auto& a : atoms_) t += a.c;
  return t;
}

CentralMeasure validate_measure(const FiniteSemigroup& s, std::span<const Atom> atoms,
                                double nonzero_tol) {
  std::vector<Atom> sorted(atoms.begin(), atoms.end());
  std::ranges::sort(sorted, {}, &Atom::z);

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Element z = sorted[i].z;
    if (z < 0 || static_cast<std::size_t>(z) >= s.size())
      throw Error(ErrorCode::AtomOutOfRange, "atom " + std::to_string(z) + " out of range", {z});
    if (i > 0 && sorted[i - 1].z == z)
      throw Error(ErrorCode::DuplicateAtom, "duplicate atom " + std::to_string(z), {z});
    if (!std::isfinite(sorted[i].c.real()) || !std::isfinite(sorted[i].c.imag()))
      throw Error(ErrorCode::NonFinite, "non-finite coefficient at atom " + std::to_string(z), {z});
    if (!s.is_central(z))
      throw Error(ErrorCode::AtomNotCentral, "atom " + s.labels()[static_cast<std::size_t>(z)] +
                                                 " is not central", {z});
  }
  if (std::ranges::none_of(sorted, [&](const Atom& a) { return std::abs(a.c) > nonzero_tol; }))
    throw Error(ErrorCode::ZeroMeasure, "measure has no nonzero atom");

  CentralMeasure mu;
  mu.n_ = s.size();
  for (const auto& a : sorted) mu.norm_ += std::abs(a.c);
  mu.atoms_ = std::move(sorted);
  return mu;
}

CentralMeasure dirac(const FiniteSemigroup& s, Element z) {
  const Atom a{z, 1.0};
  return validate_measure(s, std::span<const Atom>(&a, 1));
}

Complex integrate(const CFunc& f, const CentralMeasure& mu) {
  if (f.size() != mu.semigroup_size())
    throw Error(ErrorCode::SizeMismatch, "function size does not match the measure's semigroup");
  Complex acc{};
  for (const auto& a : mu.atoms()) acc += a.c * f(a.z);
  return acc;
}

Complex shifted_integrate(const FiniteSemigroup& s, const CFunc& f, Element x,
                          const CentralMeasure& mu) {
  check_size(s, f);
  Complex acc{};
  for (const auto& a : mu.atoms()) acc += a.c * f(s.op(x, a.z));
  return acc;
}

CFunc shifted(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu) {
  check_size(s, f);
  const std::size_t n = s.size();
  CFunc out(n);
  std::vector<Element> column(n);
  const auto& k = kernels::active();
  for (const auto& a : mu.atoms()) {
    for (std::size_t w = 0; w < n; ++w) column[w] = s.op(static_cast<Element>(w), a.z);
    k.gather_axpy(a.c, f.data(), column.data(), n, out.values().data());
  }
  return out;
}

Complex double_shifted_integrate(const FiniteSemigroup& s, const CFunc& f, Element x,
                                 const CentralMeasure& mu, const InvolutiveMorphism* first_twist) {
  check_size(s, f);
  Complex acc{};
  for (const auto& ai : mu.atoms()) {
    const Element t = first_twist ? (*first_twist)(ai.z) : ai.z;
    const Element xt = s.op(x, t);
    for (const auto& aj : mu.atoms()) acc += ai.c * aj.c * f(s.op(xt, aj.z));
  }
  return acc;
}

Complex double_integrate(const FiniteSemigroup& s, const CFunc& f, const CentralMeasure& mu,
                         const InvolutiveMorphism* first_twist) {
  check_size(s, f);
  Complex acc{};
  for (const auto& ai : mu.atoms()) {
    const Element t = first_twist ? (*first_twist)(ai.z) : ai.z;
    for (const auto& aj : mu.atoms()) acc += ai.c * aj.c * f(s.op(t, aj.z));
  }
  return acc;
}

CFunc compose(const CFunc& f, const InvolutiveMorphism& sigma) {
  if (f.size() != sigma.size()) throw Error(ErrorCode::SizeMismatch, "function/morphism size mismatch");
  CFunc out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f(sigma(static_cast<Element>(x)));
  return out;
}

}  // namespace feqlab
