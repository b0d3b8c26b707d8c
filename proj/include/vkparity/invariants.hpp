#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "vkparity/errors.hpp"
#include "vkparity/gauss_diagram.hpp"
#include "vkparity/parity.hpp"

namespace vkp {

/// Strictly increasing index tuple Z = (z_1, ..., z_n).
struct TupleSpec {
  std::vector<int> z;

  friend bool operator==(const TupleSpec&, const TupleSpec&) = default;
  friend auto operator<=>(const TupleSpec&, const TupleSpec&) = default;
};

inline std::string to_string(const TupleSpec& t) {
  std::string s;
  for (std::size_t i = 0; i < t.z.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t.z[i]);
  }
  return s;
}

namespace detail {

inline void check_increasing(const TupleSpec& t) {
  if (t.z.empty()) throw BadTuple("index tuple is empty");
  for (std::size_t i = 1; i < t.z.size(); ++i) {
    if (t.z[i - 1] >= t.z[i]) {
      throw BadTuple("index tuple (" + to_string(t) + ") is not strictly increasing");
    }
  }
}

}  // namespace detail

/// A-family tuples: nonzero, strictly increasing entries.
inline void check_a_tuple(const TupleSpec& t) {
  detail::check_increasing(t);
  for (int z : t.z) {
    if (z == 0) throw BadTuple("A-family tuple (" + to_string(t) + ") contains 0");
  }
}

/// V-family tuples: strictly increasing with 0 < z_1.
inline void check_v_tuple(const TupleSpec& t) {
  detail::check_increasing(t);
  if (t.z.front() <= 0) {
    throw BadTuple("V-family tuple (" + to_string(t) + ") must start above 0");
  }
}

/// Labels of chords with parity exactly i. Not a move invariant by itself.
inline std::vector<int> a_set(const GaussDiagram& d, int i,
                              const IntConvention& conv = IntConvention::standard()) {
  if (i == 0) throw ZeroIndex("A_i is only defined for i != 0");
  std::vector<int> out;
  for (const auto& [label, p] : parity_map(d, conv)) {
    if (p == i) out.push_back(label);
  }
  return out;
}

/// Labels of chords with |parity| = i.
inline std::vector<int> v_set(const GaussDiagram& d, int i,
                              const IntConvention& conv = IntConvention::standard()) {
  if (i < 1) throw BadIndex("V_i is only defined for i >= 1");
  std::vector<int> out;
  for (const auto& [label, p] : parity_map(d, conv)) {
    if (std::abs(p) == i) out.push_back(label);
  }
  return out;
}

/// Chords with parity 0. Diagnostic only; not an invariant.
inline std::vector<int> zero_parity_chords(const GaussDiagram& d,
                                           const IntConvention& conv = IntConvention::standard()) {
  std::vector<int> out;
  for (const auto& [label, p] : parity_map(d, conv)) {
    if (p == 0) out.push_back(label);
  }
  return out;
}

inline std::int64_t a_signed(const GaussDiagram& d, int i,
                             const IntConvention& conv = IntConvention::standard()) {
  std::int64_t sum = 0;
  for (int label : a_set(d, i, conv)) sum += d.chord(label).sign;
  return sum;
}

inline std::int64_t v_signed(const GaussDiagram& d, int i,
                             const IntConvention& conv = IntConvention::standard()) {
  std::int64_t sum = 0;
  for (int label : v_set(d, i, conv)) sum += d.chord(label).sign;
  return sum;
}

// The z_i are distinct, so the tuple sets are products of disjoint chord sets
// and the signed count factorizes.

inline std::int64_t a_tuple_signed(const GaussDiagram& d, const TupleSpec& z,
                                   const IntConvention& conv = IntConvention::standard()) {
  check_a_tuple(z);
  const auto parities = parity_map(d, conv);
  std::int64_t product = 1;
  for (int zi : z.z) {
    std::int64_t s = 0;
    for (const auto& [label, p] : parities) {
      if (p == zi) s += d.chord(label).sign;
    }
    product *= s;
  }
  return product;
}

inline std::int64_t v_tuple_signed(const GaussDiagram& d, const TupleSpec& z,
                                   const IntConvention& conv = IntConvention::standard()) {
  check_v_tuple(z);
  const auto parities = parity_map(d, conv);
  std::int64_t product = 1;
  for (int zi : z.z) {
    std::int64_t s = 0;
    for (const auto& [label, p] : parities) {
      if (std::abs(p) == zi) s += d.chord(label).sign;
    }
    product *= s;
  }
  return product;
}

/// Every strictly increasing tuple over 1..max_index with length 1..max_order.
inline std::vector<TupleSpec> v_tuples(int max_index, int max_order) {
  std::vector<TupleSpec> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (!current.empty()) out.push_back(TupleSpec{current});
    if (static_cast<int>(current.size()) == max_order) return;
    for (int v = next; v <= max_index; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const TupleSpec& a, const TupleSpec& b) {
    return a.z.size() != b.z.size() ? a.z.size() < b.z.size() : a.z < b.z;
  });
  return out;
}

/// Bundled comparison key for invariance fuzzing.
struct InvariantProfile {
  int max_index = 4;
  int max_order = 2;
  std::map<int, std::int64_t> a_signed;   // i in [-max_index, max_index], i != 0
  std::map<int, std::int64_t> v_signed;   // i in [1, max_index]
  std::map<TupleSpec, std::int64_t> v_tuple;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

inline InvariantProfile invariant_profile(const GaussDiagram& d, int max_index = 4,
                                          int max_order = 2,
                                          const IntConvention& conv = IntConvention::standard()) {
  if (max_index < 1) throw BadIndex("max_index must be at least 1");
  if (max_order < 1) throw BadTuple("max_order must be at least 1");
  InvariantProfile prof;
  prof.max_index = max_index;
  prof.max_order = max_order;
  const auto parities = parity_map(d, conv);
  for (int i = -max_index; i <= max_index; ++i) {
    if (i != 0) prof.a_signed[i] = 0;
  }
  for (int i = 1; i <= max_index; ++i) prof.v_signed[i] = 0;
  for (const auto& [label, p] : parities) {
    const int sign = d.chord(label).sign;
    if (p != 0 && std::abs(p) <= max_index) {
      prof.a_signed[p] += sign;
      prof.v_signed[std::abs(p)] += sign;
    }
  }
  for (const auto& t : v_tuples(max_index, max_order)) {
    std::int64_t product = 1;
    for (int zi : t.z) product *= prof.v_signed[zi];
    prof.v_tuple[t] = product;
  }
  return prof;
}

}  // namespace vkp
