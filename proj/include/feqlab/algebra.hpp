#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feqlab/common.hpp"

namespace feqlab {

/// A finite semigroup given by its Cayley table. Construct through
/// validate_semigroup; instances are immutable afterwards.
class FiniteSemigroup {
 public:
  std::size_t size() const noexcept { return n_; }

  /// x * y
  Element op(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)];
  }

  /// Row x of the table, i.e. y -> x * y.
  std::span<const Element> row(Element x) const {
    return {table_.data() + static_cast<std::size_t>(x) * n_, n_};
  }
  std::span<const Element> table() const noexcept { return table_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<Element>& identity() const noexcept { return identity_; }
  const std::vector<Element>& center() const noexcept { return center_; }
  bool is_central(Element z) const { return central_mask_[static_cast<std::size_t>(z)]; }
  bool is_commutative() const noexcept { return center_.size() == n_; }

 private:
  friend FiniteSemigroup validate_semigroup(std::size_t, std::span<const Element>,
                                            std::vector<std::string>);
  FiniteSemigroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::optional<Element> identity_;
  std::vector<Element> center_;
  std::vector<bool> central_mask_;
};

enum class MorphismKind { Automorphism, AntiAutomorphism };

const char* to_string(MorphismKind kind);
MorphismKind morphism_kind_from_string(const std::string& s);

/// An involutive automorphism or anti-automorphism. Construct through validate_morphism.
class InvolutiveMorphism {
 public:
  Element operator()(Element x) const { return map_[static_cast<std::size_t>(x)]; }
  std::span<const Element> map() const noexcept { return map_; }
  MorphismKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return map_.size(); }
  bool is_identity() const;

 private:
  friend InvolutiveMorphism validate_morphism(const FiniteSemigroup&, std::span<const Element>,
                                              MorphismKind);
  InvolutiveMorphism() = default;

  std::vector<Element> map_;
  MorphismKind kind_ = MorphismKind::Automorphism;
};

/// Checks shape, range and associativity (naive triple loop, first violating
/// (x,y,z) in lexicographic order is reported) and fills in identity and center.
/// Missing labels default to the element index.
FiniteSemigroup validate_semigroup(std::size_t n, std::span<const Element> table,
                                   std::vector<std::string> labels = {});

FiniteSemigroup validate_semigroup(const std::vector<std::vector<Element>>& table,
                                   std::vector<std::string> labels = {});

std::vector<Element> center(const FiniteSemigroup& s);
std::optional<Element> find_identity(const FiniteSemigroup& s);

/// Checks bijectivity, then the morphism law for the declared kind (first
/// failing (x, y) reported), then involutivity.
InvolutiveMorphism validate_morphism(const FiniteSemigroup& s, std::span<const Element> map,
                                     MorphismKind kind);

InvolutiveMorphism identity_morphism(const FiniteSemigroup& s);

/// Direct product; element (a, b) has index a * |t| + b.
FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t);

struct NamedMorphism {
  std::string name;
  InvolutiveMorphism morphism;
};

struct CatalogEntry {
  std::string name;
  FiniteSemigroup semigroup;
  std::vector<NamedMorphism> morphisms;

  const InvolutiveMorphism& morphism(const std::string& morphism_name) const;
};

/// Standard test structures: cyclic(n), product(a,b) = C_a x C_b, sym3,
/// semilattice_chain(k), leftzero(n), each with its standard involutive morphisms.
CatalogEntry build_standard(const std::string& name, std::span<const int> params = {});

/// Parses "cyclic:4", "product:2,4", "sym3", ... into build_standard.
CatalogEntry build_standard_from_spec(const std::string& spec);

}  // namespace feqlab
