#include "feqlab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace feqlab {

namespace {

std::string describe(std::initializer_list<std::int64_t> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

const char* to_string(MorphismKind kind) {
  return kind == MorphismKind::Automorphism ? "automorphism" : "anti-automorphism";
}

MorphismKind morphism_kind_from_string(const std::string& s) {
  if (s == "automorphism") return MorphismKind::Automorphism;
  if (s == "anti-automorphism") return MorphismKind::AntiAutomorphism;
  throw Error(ErrorCode::BadParams, "unknown morphism kind '" + s + "'");
}

bool InvolutiveMorphism::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<Element>(i)) return false;
  return true;
}

FiniteSemigroup validate_semigroup(std::size_t n, std::span<const Element> table,
                                   std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::BadShape, "semigroup must have at least one element");
  if (table.size() != n * n)
    throw Error(ErrorCode::BadShape, "table must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::BadShape, "labels must have one entry per element");

  const auto ne = static_cast<Element>(n);
  for (Element x = 0; x < ne; ++x)
    for (Element y = 0; y < ne; ++y) {
      const Element v = table[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
      if (v < 0 || v >= ne)
        throw Error(ErrorCode::EntryOutOfRange, "table entry out of range at " + describe({x, y}),
                    {x, y});
    }

  FiniteSemigroup s;
  s.n_ = n;
  s.table_.assign(table.begin(), table.end());

  for (Element x = 0; x < ne; ++x)
    for (Element y = 0; y < ne; ++y) {
      const Element xy = s.op(x, y);
      for (Element z = 0; z < ne; ++z) {
        if (s.op(xy, z) != s.op(x, s.op(y, z)))
          throw Error(ErrorCode::NotAssociative,
                      "associativity fails at " + describe({x, y, z}), {x, y, z});
      }
    }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  s.labels_ = std::move(labels);
  s.identity_ = find_identity(s);
  s.center_ = center(s);
  s.central_mask_.assign(n, false);
  for (auto z : s.center_) s.central_mask_[static_cast<std::size_t>(z)] = true;
  return s;
}

FiniteSemigroup validate_semigroup(const std::vector<std::vector<Element>>& table,
                                   std::vector<std::string> labels) {
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::BadShape, "table must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_semigroup(n, flat, std::move(labels));
}

std::vector<Element> center(const FiniteSemigroup& s) {
  std::vector<Element> out;
  const auto n = static_cast<Element>(s.size());
  for (Element z = 0; z < n; ++z) {
    bool central = true;
    for (Element x = 0; x < n && central; ++x) central = s.op(z, x) == s.op(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::optional<Element> find_identity(const FiniteSemigroup& s) {
  const auto n = static_cast<Element>(s.size());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = s.op(e, x) == x && s.op(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

InvolutiveMorphism validate_morphism(const FiniteSemigroup& s, std::span<const Element> map,
                                     MorphismKind kind) {
  const std::size_t n = s.size();
  const auto ne = static_cast<Element>(n);
  if (map.size() != n) throw Error(ErrorCode::NotBijective, "map must have one entry per element");

  std::vector<bool> hit(n, false);
  for (auto v : map) {
    if (v < 0 || v >= ne || hit[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::NotBijective, "map is not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }

  const auto at = [&](Element x) { return map[static_cast<std::size_t>(x)]; };
  for (Element x = 0; x < ne; ++x)
    for (Element y = 0; y < ne; ++y) {
      const Element lhs = at(s.op(x, y));
      const Element rhs =
          kind == MorphismKind::Automorphism ? s.op(at(x), at(y)) : s.op(at(y), at(x));
      if (lhs != rhs)
        throw Error(ErrorCode::NotMorphism,
                    std::string("map is not an ") + to_string(kind) + " at " + describe({x, y}),
                    {x, y});
    }

  for (Element x = 0; x < ne; ++x)
    if (at(at(x)) != x)
      throw Error(ErrorCode::NotInvolutive, "map is not involutive at " + describe({x}), {x});

  InvolutiveMorphism m;
  m.map_.assign(map.begin(), map.end());
  m.kind_ = kind;
  return m;
}

InvolutiveMorphism identity_morphism(const FiniteSemigroup& s) {
  std::vector<Element> map(s.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Element>(i);
  return validate_morphism(s, map, MorphismKind::Automorphism);
}

FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  const std::size_t a = s.size(), b = t.size(), n = a * b;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto x1 = static_cast<Element>(x / b), x2 = static_cast<Element>(x % b);
    labels[x] = "(" + s.labels()[x / b] + "," + t.labels()[x % b] + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto y1 = static_cast<Element>(y / b), y2 = static_cast<Element>(y % b);
      table[x * n + y] = static_cast<Element>(static_cast<std::size_t>(s.op(x1, y1)) * b +
                                              static_cast<std::size_t>(t.op(x2, y2)));
    }
  }
  return validate_semigroup(n, table, std::move(labels));
}

}  // namespace feqlab
