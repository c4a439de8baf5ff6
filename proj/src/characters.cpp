#include "feqlab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_map>

namespace feqlab {

namespace {

constexpr double kSnapTol = 1e-7;
constexpr double kOrderTol = 1e-9;

class CharacterSearch {
 public:
  CharacterSearch(const FiniteSemigroup& s) : s_(s), n_(s.size()), value_(n_), assigned_(n_, false) {
    candidates_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      const int b = power_cycle(s, static_cast<Element>(x)).period;
      auto& c = candidates_[x];
      c.push_back(0.0);
      for (int k = 0; k < b; ++k) c.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / b));
    }
  }

  std::vector<CFunc> run() {
    results_.clear();
    descend(0);
    return std::move(results_);
  }

 private:
  void descend(std::size_t x) {
    while (x < n_ && assigned_[x]) ++x;
    if (x == n_) {
      results_.emplace_back(value_);
      return;
    }
    for (const Complex& v : candidates_[x]) {
      const std::size_t mark = trail_.size();
      if (propagate(static_cast<Element>(x), v)) descend(x + 1);
      undo(mark);
    }
  }

  std::optional<Complex> snap(std::size_t u, Complex v) const {
    for (const Complex& c : candidates_[u])
      if (std::abs(c - v) <= kSnapTol) return c;
    return std::nullopt;
  }

  // Assigns u := v and everything it forces through the table; false on conflict.
  bool propagate(Element u0, Complex v0) {
    queue_.clear();
    queue_.emplace_back(u0, v0);
    while (!queue_.empty()) {
      const auto [u, v] = queue_.back();
      queue_.pop_back();
      const auto ui = static_cast<std::size_t>(u);
      if (assigned_[ui]) {
        if (std::abs(value_[ui] - v) > kSnapTol) return false;
        continue;
      }
      const auto snapped = snap(ui, v);
      if (!snapped) return false;
      assigned_[ui] = true;
      value_[ui] = *snapped;
      trail_.push_back(u);
      for (std::size_t w = 0; w < n_; ++w) {
        if (!assigned_[w]) continue;
        const auto we = static_cast<Element>(w);
        const Complex prod = value_[ui] * value_[w];
        queue_.emplace_back(s_.op(u, we), prod);
        if (w != ui) queue_.emplace_back(s_.op(we, u), prod);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      assigned_[static_cast<std::size_t>(trail_.back())] = false;
      trail_.pop_back();
    }
  }

  const FiniteSemigroup& s_;
  std::size_t n_;
  std::vector<std::vector<Complex>> candidates_;
  CFunc value_;
  std::vector<bool> assigned_;
  std::vector<Element> trail_;
  std::vector<std::pair<Element, Complex>> queue_;
  std::vector<CFunc> results_;
};

double canonical_arg(Complex v) {
  if (std::abs(v) <= 1e-12) return 0.0;
  double a = std::arg(v);
  if (a < 0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi - kOrderTol) a = 0.0;
  return a;
}

}  // namespace

PowerCycle power_cycle(const FiniteSemigroup& s, Element x) {
  std::unordered_map<Element, int> first_seen;
  Element p = x;
  for (int k = 1;; ++k) {
    const auto [it, inserted] = first_seen.emplace(p, k);
    if (!inserted) return {it->second, k - it->second};
    p = s.op(p, x);
  }
}

bool canonical_less(const CFunc& a, const CFunc& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double aa = canonical_arg(a[i]), ba = canonical_arg(b[i]);
    if (std::abs(aa - ba) > kOrderTol) return aa < ba;
    const double am = std::abs(a[i]), bm = std::abs(b[i]);
    if (std::abs(am - bm) > kOrderTol) return am < bm;
  }
  return a.size() < b.size();
}

std::vector<Character> enumerate_characters(const FiniteSemigroup& s,
                                            const CharacterOptions& options) {
  auto found = CharacterSearch(s).run();
  std::ranges::sort(found, canonical_less);

  std::vector<Character> out;
  for (auto& f : found) {
    if (!options.include_zero && f.sup_norm() <= kSnapTol) continue;
    const bool dup = std::ranges::any_of(
        out, [&](const Character& c) { return max_distance(c.values, f) <= options.dedup_tol; });
    if (!dup) out.push_back({std::move(f)});
  }
  return out;
}

}  // namespace feqlab
