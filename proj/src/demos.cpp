#include <algorithm>

#include "feqlab/cli.hpp"

namespace feqlab::cli {

const std::vector<Demo>& demo_catalog() {
  static const std::vector<Demo> demos{
      {"c4-neg", "Z/4 with x -> -x and mu = delta_1", "cyclic:4", "neg", {{1, 1.0}}},
      {"c4-id", "Z/4 with the identity involution and mu = delta_1", "cyclic:4", "id", {{1, 1.0}}},
      {"s3-inv", "S3 with inversion (anti-automorphism) and mu = delta_e", "sym3", "inv", {{0, 1.0}}},
      {"chain2", "two-element chain semilattice, identity involution, mu = delta_top", "semilattice_chain:2",
       "id", {{1, 1.0}}},
      {"c2xc4-neg2", "Z/2 x Z/4 with negation on the second factor and mu = delta_(0,1)",
       "product:2,4", "neg2", {{1, 1.0}}},
  };
  return demos;
}

const Demo& find_demo(const std::string& name) {
  const auto& all = demo_catalog();
  const auto it = std::ranges::find(all, name, &Demo::name);
  if (it == all.end()) throw Error(ErrorCode::UnknownCatalogName, "unknown demo '" + name + "'");
  return *it;
}

Setup realize(const Demo& demo) {
  const auto entry = build_standard_from_spec(demo.catalog);
  const auto& sigma = entry.morphism(demo.morphism);
  return {"demo:" + demo.name, entry.semigroup, sigma, validate_measure(entry.semigroup, demo.atoms)};
}

}  // namespace feqlab::cli
