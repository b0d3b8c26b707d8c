#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "vkparity/errors.hpp"
#include "vkparity/flat.hpp"
#include "vkparity/formal_sum.hpp"
#include "vkparity/gauss_diagram.hpp"
#include "vkparity/invariants.hpp"
#include "vkparity/parity.hpp"

namespace vkp {

/// Singular label -> +1 (positive resolution) or -1 (negative resolution).
using Resolution = std::map<int, int>;

inline std::vector<int> singular_labels(const GaussDiagram& k) {
  std::vector<int> out;
  for (const auto& c : k.chords()) {
    if (c.singular) out.push_back(c.label);
  }
  return out;
}

/// Marks the given chords singular. Each stores its positive resolution, so a
/// negative chord is crossing-changed first.
inline GaussDiagram singularize(const GaussDiagram& d, const std::vector<int>& labels) {
  auto tokens = d.tokens();
  for (int l : labels) {
    const Chord& c = d.chord(l);
    for (auto& t : tokens) {
      if (t.label != l) continue;
      if (c.sign < 0) {
        t.role = opposite(t.role);
        t.sign = 1;
      }
      t.singular = true;
    }
  }
  return GaussDiagram::from_tokens(std::move(tokens));
}

/// Replaces every singular chord by its positive resolution (r = +1) or by the
/// crossing change of it (r = -1).
inline GaussDiagram resolve(const GaussDiagram& k, const Resolution& r) {
  const auto sing = singular_labels(k);
  for (int l : sing) {
    auto it = r.find(l);
    if (it == r.end()) {
      throw IncompleteResolution("no resolution given for singular chord " + std::to_string(l));
    }
    if (it->second != 1 && it->second != -1) {
      throw IncompleteResolution("resolution of chord " + std::to_string(l) + " must be +1 or -1");
    }
  }
  for (const auto& [l, v] : r) {
    if (!std::binary_search(sing.begin(), sing.end(), l)) {
      throw IncompleteResolution("chord " + std::to_string(l) + " is not singular");
    }
  }
  auto tokens = k.tokens();
  for (auto& t : tokens) {
    if (!t.singular) continue;
    t.singular = false;
    if (r.at(t.label) < 0) {
      t.role = opposite(t.role);
      t.sign = -t.sign;
    }
  }
  return GaussDiagram::from_tokens(std::move(tokens));
}

namespace detail {

inline void require_nonsingular(const GaussDiagram& k) {
  for (const auto& c : k.chords()) {
    if (c.singular) {
      throw SingularChord("chord " + std::to_string(c.label) +
                          " is singular; resolve it before evaluating");
    }
  }
}

inline std::string smoothed_flat(const GaussDiagram& k, const std::vector<int>& labels,
                                 int r3_budget) {
  return canonical_flat(flatten(smooth_all(k, labels)), r3_budget);
}

}  // namespace detail

/// S_i(K): sum over crossings x with |p(x)| = i of sgn(x) F(K^x).
inline FormalSum s_index(const GaussDiagram& k, int i, int r3_budget = default_r3_budget,
                         const IntConvention& conv = IntConvention::standard()) {
  if (i < 1) throw BadIndex("S_i is only defined for i >= 1");
  detail::require_nonsingular(k);
  FormalSum out;
  for (int x : v_set(k, i, conv)) out.add(detail::smoothed_flat(k, {x}, r3_budget), k.chord(x).sign);
  return out;
}

/// S_Z(K): sum over tuples (x_1..x_n), |p(x_j)| = z_j, of the sign product
/// times F(K^{x_1..x_n}).
inline FormalSum s_tuple(const GaussDiagram& k, const TupleSpec& z,
                         int r3_budget = default_r3_budget,
                         const IntConvention& conv = IntConvention::standard()) {
  check_v_tuple(z);
  detail::require_nonsingular(k);
  std::vector<std::vector<int>> choices;
  for (int zi : z.z) choices.push_back(v_set(k, zi, conv));
  FormalSum out;
  std::vector<int> picked;
  auto rec = [&](auto&& self, std::size_t depth, std::int64_t sign) -> void {
    if (depth == choices.size()) {
      out.add(detail::smoothed_flat(k, picked, r3_budget), sign);
      return;
    }
    for (int x : choices[depth]) {
      picked.push_back(x);
      self(self, depth + 1, sign * k.chord(x).sign);
      picked.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

using SumFunctional = std::function<FormalSum(const GaussDiagram&)>;

/// Sum over all 2^n resolutions r of the singular chords of sgn(r) f(K_r).
inline FormalSum expand_singular(const GaussDiagram& k, const SumFunctional& f,
                                 const IntConvention& conv = IntConvention::standard()) {
  const auto sing = singular_labels(k);
  if (sing.empty()) throw NoSingularChords("diagram has no singular chords");
  if (sing.size() > 20) throw BadTuple("too many singular chords to expand");
  FormalSum out;
  std::map<int, int> abs_parity;
  const std::uint32_t count = 1u << sing.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Resolution r;
    int sign = 1;
    for (std::size_t b = 0; b < sing.size(); ++b) {
      const int v = (mask >> b) & 1u ? -1 : 1;
      r[sing[b]] = v;
      sign *= v;
    }
    const GaussDiagram resolved = resolve(k, r);
    // A crossing change only negates the parity of the changed chord.
    for (int l : sing) {
      const int ap = std::abs(parity(resolved, l, conv));
      auto [it, inserted] = abs_parity.try_emplace(l, ap);
      if (!inserted && it->second != ap) {
        throw InternalError("|p| of singular chord " + std::to_string(l) +
                            " depends on its resolution");
      }
    }
    out += sign * f(resolved);
  }
  return out;
}

struct SubsetResult {
  std::vector<int> labels;
  Comparison verdict = Comparison::equal;  // comparison of the expansion with 0
};

struct DegreeReport {
  std::vector<SubsetResult> subsets;

  std::size_t count(Comparison c) const {
    return static_cast<std::size_t>(std::count_if(
        subsets.begin(), subsets.end(), [c](const SubsetResult& s) { return s.verdict == c; }));
  }
  bool all_zero() const { return count(Comparison::equal) == subsets.size(); }
};

/// Singularizes every n_sing-subset of chords (or `samples` random subsets
/// when all_subsets is false) and checks that the expansion vanishes.
inline DegreeReport degree_check(const SumFunctional& f, const GaussDiagram& k, int n_sing,
                                 bool all_subsets = true, std::size_t samples = 0,
                                 std::uint64_t seed = 0, int r3_budget = default_r3_budget) {
  detail::require_nonsingular(k);
  const auto labels = k.labels();
  if (n_sing < 1 || static_cast<std::size_t>(n_sing) > labels.size()) {
    throw BadIndex("singular count must lie in 1.." + std::to_string(labels.size()));
  }
  std::vector<std::vector<int>> subsets;
  if (all_subsets) {
    std::vector<bool> mask(labels.size(), false);
    std::fill(mask.begin(), mask.begin() + n_sing, true);
    do {
      std::vector<int> s;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (mask[i]) s.push_back(labels[i]);
      }
      subsets.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<int> pool = labels;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(n_sing));
      std::sort(pool.begin(), pool.end());
      subsets.push_back(std::move(pool));
    }
  }
  DegreeReport report;
  for (auto& s : subsets) {
    const auto expanded = expand_singular(singularize(k, s), f);
    report.subsets.push_back({std::move(s), sum_compare(expanded, FormalSum{}, r3_budget)});
  }
  return report;
}

}  // namespace vkp
