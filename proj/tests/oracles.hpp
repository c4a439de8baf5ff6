#pragma once

// Independent reference implementations used as test oracles. Everything here
// works from the raw Cayley table and the definitions, never through the
// library's kernels or shifted-integral helpers.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "feqlab/algebra.hpp"
#include "feqlab/characters.hpp"
#include "feqlab/measure.hpp"

namespace oracle {

using feqlab::CFunc;
using feqlab::Complex;
using feqlab::Element;

struct Table {
  int n;
  std::vector<int> t;
  int op(int x, int y) const { return t[static_cast<std::size_t>(x * n + y)]; }
};

inline Table table_of(const feqlab::FiniteSemigroup& s) {
  Table out{static_cast<int>(s.size()), {}};
  for (auto v : s.table()) out.t.push_back(v);
  return out;
}

struct Atoms {
  std::vector<int> z;
  std::vector<Complex> c;
};

inline Atoms atoms_of(const feqlab::CentralMeasure& mu) {
  Atoms a;
  for (const auto& at : mu.atoms()) {
    a.z.push_back(at.z);
    a.c.push_back(at.c);
  }
  return a;
}

inline Complex at(const CFunc& f, int x) { return f[static_cast<std::size_t>(x)]; }

// int f(w t) dmu(t), evaluated at w directly.
inline Complex shift_at(const Table& t, const Atoms& a, const CFunc& f, int w) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.z.size(); ++i) acc += a.c[i] * at(f, t.op(w, a.z[i]));
  return acc;
}

struct Max {
  double value = 0.0;
  int x = 0, y = 0;
};

// Lexicographically first pair attaining the maximum within 1e-12.
inline Max pair_max(int n, const std::function<double(int, int)>& r) {
  double best = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) best = std::max(best, r(x, y));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r(x, y) >= best - 1e-12) return {best, x, y};
  return {};
}

inline Max dalembert(const Table& t, const std::vector<int>& sig, const CFunc& g) {
  return pair_max(t.n, [&](int x, int y) {
    return std::abs(at(g, t.op(x, y)) + at(g, t.op(x, sig[y])) - 2.0 * at(g, x) * at(g, y));
  });
}

// sign = +1: Kannappan; sign = -1: Van Vleck.
inline Max integral_equation(const Table& t, const std::vector<int>& sig, const Atoms& a,
                             const CFunc& f, double sign) {
  return pair_max(t.n, [&](int x, int y) {
    // zi central, so f(x y zi) is also f(x zi y); use the latter to stay independent.
    Complex plain = 0.0, twisted = 0.0;
    for (std::size_t i = 0; i < a.z.size(); ++i) {
      plain += a.c[i] * at(f, t.op(t.op(x, a.z[i]), y));
      twisted += a.c[i] * at(f, t.op(t.op(x, a.z[i]), sig[y]));
    }
    return std::abs(sign * plain + twisted - 2.0 * at(f, x) * at(f, y));
  });
}

inline Max wilson(const Table& t, const std::vector<int>& sig, const CFunc& f, const CFunc& g) {
  return pair_max(t.n, [&](int x, int y) {
    return std::abs(at(f, t.op(x, y)) + at(f, t.op(x, sig[y])) - 2.0 * at(f, x) * at(g, y));
  });
}

inline Max sine_addition(const Table& t, const CFunc& f, const CFunc& g) {
  return pair_max(t.n, [&](int x, int y) {
    return std::abs(at(f, t.op(x, y)) - at(f, x) * at(g, y) - at(f, y) * at(g, x));
  });
}

inline Max multiplicative(const Table& t, const CFunc& f) {
  return pair_max(t.n, [&](int x, int y) { return std::abs(at(f, t.op(x, y)) - at(f, x) * at(f, y)); });
}

inline int period_of(const Table& t, int x) {
  std::vector<int> powers{x};
  while (true) {
    const int next = t.op(powers.back(), x);
    for (std::size_t i = 0; i < powers.size(); ++i)
      if (powers[i] == next) return static_cast<int>(powers.size() - i);
    powers.push_back(next);
  }
}

// Every multiplicative f with values in {0} U {L-th roots of unity}, L = lcm of periods.
inline std::vector<CFunc> brute_force_characters(const Table& t) {
  int l = 1;
  for (int x = 0; x < t.n; ++x) l = std::lcm(l, period_of(t, x));
  std::vector<Complex> values{0.0};
  for (int k = 0; k < l; ++k) values.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / l));

  std::vector<CFunc> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(t.n), 0);
  while (true) {
    CFunc f(static_cast<std::size_t>(t.n));
    for (int x = 0; x < t.n; ++x) f[static_cast<std::size_t>(x)] = values[digit[static_cast<std::size_t>(x)]];
    if (f.sup_norm() > 0.5 && multiplicative(t, f).value <= 1e-9) out.push_back(f);
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == values.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

inline bool same_set(const std::vector<CFunc>& a, const std::vector<CFunc>& b, double tol) {
  auto covered = [&](const std::vector<CFunc>& p, const std::vector<CFunc>& q) {
    for (const auto& f : p) {
      bool hit = false;
      for (const auto& g : q) hit = hit || feqlab::max_distance(f, g) <= tol;
      if (!hit) return false;
    }
    return true;
  };
  return a.size() == b.size() && covered(a, b) && covered(b, a);
}

inline CFunc random_function(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  CFunc f(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = d(rng);
    f[i] = {re, d(rng)};
  }
  return f;
}

inline std::vector<int> map_of(const feqlab::InvolutiveMorphism& m) {
  return {m.map().begin(), m.map().end()};
}

inline CFunc cf(std::initializer_list<Complex> v) { return CFunc(v); }

// The error a call throws, if any.
template <class F>
std::optional<feqlab::Error> thrown(F&& fn) {
  try {
    fn();
  } catch (const feqlab::Error& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace oracle
