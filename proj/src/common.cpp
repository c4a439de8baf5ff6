#include "feqlab/common.hpp"

#include <algorithm>
#include <cmath>

namespace feqlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotMorphism: return "NotMorphism";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::AtomOutOfRange: return "AtomOutOfRange";
    case ErrorCode::AtomNotCentral: return "AtomNotCentral";
    case ErrorCode::DuplicateAtom: return "DuplicateAtom";
    case ErrorCode::ZeroMeasure: return "ZeroMeasure";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::DegenerateIntegral: return "DegenerateIntegral";
    case ErrorCode::NotInClassB: return "NotInClassB";
    case ErrorCode::SymmetryViolated: return "SymmetryViolated";
    case ErrorCode::NegativeDelta: return "NegativeDelta";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConstructedNonSolution: return "ConstructedNonSolution";
    case ErrorCode::BijectionViolation: return "BijectionViolation";
  }
  return "Unknown";
}

bool is_math_violation(ErrorCode code) {
  return code == ErrorCode::ConstructedNonSolution || code == ErrorCode::BijectionViolation;
}

double CFunc::sup_norm() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool CFunc::is_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

CFunc CFunc::scaled(Complex s) const {
  CFunc out(*this);
  for (auto& v : out.values_) v *= s;
  return out;
}

CFunc& CFunc::operator+=(const CFunc& other) {
  if (other.size() != size()) throw Error(ErrorCode::SizeMismatch, "CFunc size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

CFunc& CFunc::operator-=(const CFunc& other) {
  if (other.size() != size()) throw Error(ErrorCode::SizeMismatch, "CFunc size mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

double max_distance(const CFunc& a, const CFunc& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "CFunc size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace feqlab
