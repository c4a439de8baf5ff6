#pragma once

#include <vector>

#include "feqlab/algebra.hpp"
#include "feqlab/common.hpp"
#include "feqlab/equations.hpp"

namespace feqlab {

/// A nonzero multiplicative function chi(xy) = chi(x) chi(y).
struct Character {
  CFunc values;
};

/// Eventual periodicity of x: the least index >= 1 and period >= 1 with
/// x^index = x^(index + period).
struct PowerCycle {
  int index = 1;
  int period = 1;
};

PowerCycle power_cycle(const FiniteSemigroup& s, Element x);

struct CharacterOptions {
  bool include_zero = false;
  double dedup_tol = Tolerances{}.dedup;
};

/// Every multiplicative function S -> C, found by backtracking over elements
/// in index order. chi(x) is either 0 or a period(x)-th root of unity, and an
/// assignment to x and y forces chi(xy). Output is sorted canonically, by
/// (argument, modulus) of the values, element by element.
std::vector<Character> enumerate_characters(const FiniteSemigroup& s,
                                            const CharacterOptions& options = {});

/// max over (x, y) of |f(xy) - f(x) f(y)|
DefectReport multiplicativity_defect(const CFunc& f, const FiniteSemigroup& s);

/// Canonical ordering used for character lists and solution sets.
bool canonical_less(const CFunc& a, const CFunc& b);

}  // namespace feqlab
