#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "vkparity/flat.hpp"

namespace vkp {

/// Integer combination of flat diagrams keyed by flat code. Zero coefficients
/// are never stored.
class FormalSum {
 public:
  FormalSum() = default;

  void add(const std::string& code, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(code, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<std::string, std::int64_t>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coefficient(const std::string& code) const {
    auto it = terms_.find(code);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Evaluates every flat diagram as 1.
  std::int64_t state_count() const {
    std::int64_t s = 0;
    for (const auto& [code, c] : terms_) s += c;
    return s;
  }

  FormalSum& operator+=(const FormalSum& other) {
    if (&other == this) return *this = 2 * other;
    for (const auto& [code, c] : other.terms_) add(code, c);
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

  friend FormalSum operator*(std::int64_t k, const FormalSum& a) {
    FormalSum out;
    if (k == 0) return out;
    for (const auto& [code, c] : a.terms_) out.terms_.emplace(code, k * c);
    return out;
  }

  friend FormalSum operator-(const FormalSum& a, const FormalSum& b) { return a + (-1) * b; }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<std::string, std::int64_t> terms_;
};

inline FormalSum sum_add(const FormalSum& a, const FormalSum& b) { return a + b; }
inline FormalSum sum_scale(const FormalSum& a, std::int64_t k) { return k * a; }
inline bool sum_is_zero(const FormalSum& a) { return a.is_zero(); }

/// Re-keys every term by its canonical flat code at the given budget.
inline FormalSum normalize(const FormalSum& a, int r3_budget) {
  FormalSum out;
  for (const auto& [code, c] : a.terms()) out.add(canonical_flat(parse_flat(code), r3_budget), c);
  return out;
}

enum class Comparison { equal, unequal, unknown };

inline std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::unequal: return "unequal";
    case Comparison::unknown: return "unknown";
  }
  return "?";
}

/// Tri-state comparison of formal sums up to flat equivalence.
///
/// equal:   the difference vanishes once terms whose bounded orbits meet are
///          identified.
/// unequal: some flat_signature class has a nonzero total coefficient in the
///          difference. The signature is preserved by every flat move, so this
///          verdict does not depend on the budget.
/// unknown: otherwise.
inline Comparison sum_compare(const FormalSum& a, const FormalSum& b,
                              int r3_budget = default_r3_budget) {
  const FormalSum diff = normalize(a - b, r3_budget);
  if (diff.is_zero()) return Comparison::equal;

  std::vector<std::pair<std::string, std::int64_t>> residual(diff.terms().begin(),
                                                             diff.terms().end());
  const std::size_t n = residual.size();
  std::vector<FlatOrbit> orbits;
  orbits.reserve(n);
  for (const auto& [code, c] : residual) orbits.push_back(flat_orbit(parse_flat(code), r3_budget));

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& small = orbits[i].visited.size() < orbits[j].visited.size() ? orbits[i] : orbits[j];
      const auto& large = &small == &orbits[i] ? orbits[j] : orbits[i];
      for (const auto& code : small.visited) {
        if (large.visited.contains(code)) {
          parent[find(i)] = find(j);
          break;
        }
      }
    }
  }
  std::map<std::size_t, std::int64_t> class_total;
  for (std::size_t i = 0; i < n; ++i) class_total[find(i)] += residual[i].second;
  bool all_zero = true;
  for (const auto& [root, total] : class_total) all_zero = all_zero && total == 0;
  if (all_zero) return Comparison::equal;

  std::map<std::string, std::int64_t> signature_total;
  for (const auto& [code, c] : residual) signature_total[flat_signature(parse_flat(code))] += c;
  for (const auto& [sig, total] : signature_total) {
    if (total != 0) return Comparison::unequal;
  }
  return Comparison::unknown;
}

}  // namespace vkp
