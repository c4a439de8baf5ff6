#include <algorithm>
#include <array>
#include <charconv>

#include "feqlab/algebra.hpp"

namespace feqlab {

namespace {

constexpr int kMaxCatalogSize = 1024;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

FiniteSemigroup make_cyclic(int n) {
  std::vector<Element> table(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x * n + y)] = (x + y) % n;
  return validate_semigroup(static_cast<std::size_t>(n), table);
}

std::vector<Element> negation_map(int n) {
  std::vector<Element> map(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) map[static_cast<std::size_t>(x)] = (n - x) % n;
  return map;
}

void add_unique(CatalogEntry& entry, std::string name, std::span<const Element> map,
                MorphismKind kind) {
  for (const auto& m : entry.morphisms)
    if (m.morphism.kind() == kind && std::ranges::equal(m.morphism.map(), map)) return;
  entry.morphisms.push_back({std::move(name), validate_morphism(entry.semigroup, map, kind)});
}

CatalogEntry with_identity(std::string name, FiniteSemigroup s) {
  CatalogEntry entry{std::move(name), std::move(s), {}};
  entry.morphisms.push_back({"id", identity_morphism(entry.semigroup)});
  return entry;
}

CatalogEntry build_cyclic(int n) {
  require(n >= 1 && n <= kMaxCatalogSize, "cyclic(n) needs 1 <= n <= 1024");
  auto entry = with_identity("cyclic(" + std::to_string(n) + ")", make_cyclic(n));
  add_unique(entry, "neg", negation_map(n), MorphismKind::Automorphism);
  return entry;
}

CatalogEntry build_product(int a, int b) {
  require(a >= 1 && b >= 1 && a * b <= kMaxCatalogSize, "product(a,b) needs a,b >= 1, a*b <= 1024");
  auto entry = with_identity("product(" + std::to_string(a) + "," + std::to_string(b) + ")",
                             direct_product(make_cyclic(a), make_cyclic(b)));
  const auto na = negation_map(a), nb = negation_map(b);
  const auto n = static_cast<std::size_t>(a * b);
  std::vector<Element> neg(n), neg1(n), neg2(n);
  for (int x1 = 0; x1 < a; ++x1)
    for (int x2 = 0; x2 < b; ++x2) {
      const auto i = static_cast<std::size_t>(x1 * b + x2);
      neg[i] = na[static_cast<std::size_t>(x1)] * b + nb[static_cast<std::size_t>(x2)];
      neg1[i] = na[static_cast<std::size_t>(x1)] * b + x2;
      neg2[i] = x1 * b + nb[static_cast<std::size_t>(x2)];
    }
  // Kept under every name even when maps coincide (e.g. neg2 == neg for a = 2).
  for (auto& [name, map] : {std::pair{"neg", neg}, {"neg1", neg1}, {"neg2", neg2}})
    entry.morphisms.push_back({name, validate_morphism(entry.semigroup, map, MorphismKind::Automorphism)});
  return entry;
}

CatalogEntry build_sym3() {
  using Perm = std::array<int, 3>;
  // Index order: e, (12), (13), (23), (123), (132) in one-based cycle notation.
  const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  const std::vector<std::string> labels{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  const auto index_of = [&](const Perm& p) {
    return static_cast<Element>(std::ranges::find(perms, p) - perms.begin());
  };
  const auto compose = [](const Perm& p, const Perm& q) {  // p after q
    return Perm{p[static_cast<std::size_t>(q[0])], p[static_cast<std::size_t>(q[1])],
                p[static_cast<std::size_t>(q[2])]};
  };

  std::vector<Element> table(36);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) table[x * 6 + y] = index_of(compose(perms[x], perms[y]));
  auto entry = with_identity("sym3", validate_semigroup(6, table, labels));

  std::vector<Element> inv(6), conj(6);
  const Perm& t = perms[1];
  for (std::size_t x = 0; x < 6; ++x) {
    Perm p{};
    for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(perms[x][static_cast<std::size_t>(i)])] = i;
    inv[x] = index_of(p);
    conj[x] = index_of(compose(t, compose(perms[x], t)));
  }
  add_unique(entry, "inv", inv, MorphismKind::AntiAutomorphism);
  add_unique(entry, "conj12", conj, MorphismKind::Automorphism);
  return entry;
}

CatalogEntry build_chain(int k) {
  require(k >= 1 && k <= kMaxCatalogSize, "semilattice_chain(k) needs 1 <= k <= 1024");
  std::vector<Element> table(static_cast<std::size_t>(k * k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) table[static_cast<std::size_t>(x * k + y)] = std::min(x, y);
  return with_identity("semilattice_chain(" + std::to_string(k) + ")",
                       validate_semigroup(static_cast<std::size_t>(k), table));
}

CatalogEntry build_leftzero(int n) {
  require(n >= 1 && n <= kMaxCatalogSize, "leftzero(n) needs 1 <= n <= 1024");
  std::vector<Element> table(static_cast<std::size_t>(n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x * n + y)] = x;
  auto entry = with_identity("leftzero(" + std::to_string(n) + ")",
                             validate_semigroup(static_cast<std::size_t>(n), table));
  std::vector<Element> rev(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rev[static_cast<std::size_t>(x)] = n - 1 - x;
  add_unique(entry, "rev", rev, MorphismKind::Automorphism);
  return entry;
}

}  // namespace

const InvolutiveMorphism& CatalogEntry::morphism(const std::string& morphism_name) const {
  for (const auto& m : morphisms)
    if (m.name == morphism_name) return m.morphism;
  throw Error(ErrorCode::UnknownCatalogName, "no morphism '" + morphism_name + "' on " + name);
}

CatalogEntry build_standard(const std::string& name, std::span<const int> params) {
  const auto arity = [&](std::size_t k) {
    require(params.size() == k, name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cyclic") {
    arity(1);
    return build_cyclic(params[0]);
  }
  if (name == "product") {
    arity(2);
    return build_product(params[0], params[1]);
  }
  if (name == "sym3") {
    arity(0);
    return build_sym3();
  }
  if (name == "semilattice_chain") {
    arity(1);
    return build_chain(params[0]);
  }
  if (name == "leftzero") {
    arity(1);
    return build_leftzero(params[0]);
  }
  throw Error(ErrorCode::UnknownCatalogName, "unknown catalog structure '" + name + "'");
}

CatalogEntry build_standard_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::string_view rest(spec);
    rest.remove_prefix(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto tok = rest.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::BadParams, "bad catalog parameter '" + std::string(tok) + "'");
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return build_standard(name, params);
}

}  // namespace feqlab
