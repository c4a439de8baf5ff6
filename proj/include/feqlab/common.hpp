#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace feqlab {

using Complex = std::complex<double>;

/// Elements of a finite semigroup are dense indices 0..n-1.
using Element = std::int32_t;

/// Floating-point boundary for the exact conditions of the theory.
///
/// Every "x != 0" condition is evaluated as |x| > nonzero, every identity
/// "a = b" as |a - b| <= identity.
struct Tolerances {
  double identity = 1e-9;
  double nonzero = 1e-7;
  double dedup = 1e-7;
  double witness_tie = 1e-12;
};

enum class ErrorCode {
  BadShape,
  EntryOutOfRange,
  NotAssociative,
  NotBijective,
  NotInvolutive,
  NotMorphism,
  UnknownCatalogName,
  BadParams,
  AtomOutOfRange,
  AtomNotCentral,
  DuplicateAtom,
  ZeroMeasure,
  NonFinite,
  SizeMismatch,
  NotASolution,
  ZeroFunction,
  DegenerateIntegral,
  NotInClassB,
  SymmetryViolated,
  NegativeDelta,
  BadConfig,
  ParseError,
  ConstructedNonSolution,
  BijectionViolation,
};

const char* to_string(ErrorCode code);

/// True for failures that signal a mathematical inconsistency rather than bad input.
bool is_math_violation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::int64_t> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

/// A complex-valued function on a finite semigroup, stored densely.
class CFunc {
 public:
  CFunc() = default;
  explicit CFunc(std::size_t n, Complex fill = {}) : values_(n, fill) {}
  explicit CFunc(std::vector<Complex> values) : values_(std::move(values)) {}
  CFunc(std::initializer_list<Complex> values) : values_(values) {}

  static CFunc constant(std::size_t n, Complex c) { return CFunc(n, c); }

  std::size_t size() const noexcept { return values_.size(); }
  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  Complex operator()(Element x) const { return values_[static_cast<std::size_t>(x)]; }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  const Complex* data() const noexcept { return values_.data(); }

  double sup_norm() const;
  bool is_finite() const;

  CFunc scaled(Complex s) const;
  CFunc& operator+=(const CFunc& other);
  CFunc& operator-=(const CFunc& other);

  friend CFunc operator+(CFunc a, const CFunc& b) { return a += b; }
  friend CFunc operator-(CFunc a, const CFunc& b) { return a -= b; }
  friend CFunc operator*(Complex s, const CFunc& f) { return f.scaled(s); }

 private:
  std::vector<Complex> values_;
};

/// Max-norm distance; the functions must have equal size.
double max_distance(const CFunc& a, const CFunc& b);

}  // namespace feqlab
