#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vkparity/errors.hpp"
#include "vkparity/gauss_diagram.hpp"

namespace vkp {

/// Chord label -> parity value.
using ParityMap = std::map<int, int>;

/// Assigns +1/-1 to the interleaving patterns of a crossing chord pair (c, x).
///
/// A pattern is indexed by whether c's first endpoint (in basepoint order) is
/// its head, and whether the endpoint of x lying between c's two endpoints is
/// x's head. The standard table gives int_c(x) = +1 exactly when the head of x
/// lies on the arc running from head(c) to foot(c) in circle direction.
struct IntConvention {
  // table[c_head_first][between_is_head]
  std::array<std::array<int, 2>, 2> table{{{+1, -1}, {-1, +1}}};

  static constexpr IntConvention standard() noexcept { return IntConvention{}; }

  constexpr IntConvention negated() const noexcept {
    IntConvention out = *this;
    for (auto& row : out.table)
      for (auto& v : row) v = -v;
    return out;
  }

  constexpr int value(bool c_head_first, bool between_is_head) const noexcept {
    return table[c_head_first ? 1 : 0][between_is_head ? 1 : 0];
  }

  friend constexpr bool operator==(const IntConvention&, const IntConvention&) = default;
};

namespace detail {

inline bool strictly_between(std::size_t p, std::size_t lo, std::size_t hi) {
  return lo < p && p < hi;
}

inline bool chords_interleave(const Chord& c, const Chord& x) {
  const auto lo = std::min(c.head, c.foot);
  const auto hi = std::max(c.head, c.foot);
  return strictly_between(x.head, lo, hi) != strictly_between(x.foot, lo, hi);
}

inline int int_value(const Chord& c, const Chord& x, const IntConvention& conv) {
  const auto lo = std::min(c.head, c.foot);
  const auto hi = std::max(c.head, c.foot);
  const bool between_is_head = strictly_between(x.head, lo, hi);
  return conv.value(c.head < c.foot, between_is_head);
}

}  // namespace detail

/// True iff exactly one endpoint of x lies strictly inside one arc cut by c.
/// A chord does not intersect itself.
inline bool intersects(const GaussDiagram& d, int c, int x) {
  const Chord& cc = d.chord(c);
  const Chord& xx = d.chord(x);
  if (c == x) return false;
  return detail::chords_interleave(cc, xx);
}

inline int int_of(const GaussDiagram& d, int c, int x,
                  const IntConvention& conv = IntConvention::standard()) {
  const Chord& cc = d.chord(c);
  const Chord& xx = d.chord(x);
  if (c == x || !detail::chords_interleave(cc, xx)) {
    throw NotIntersecting("chords " + std::to_string(c) + " and " + std::to_string(x) +
                          " do not intersect");
  }
  return detail::int_value(cc, xx, conv);
}

/// Labels of the chords intersecting c.
inline std::vector<int> crossing_chords(const GaussDiagram& d, int c) {
  const Chord& cc = d.chord(c);
  std::vector<int> out;
  for (const auto& x : d.chords()) {
    if (x.label != c && detail::chords_interleave(cc, x)) out.push_back(x.label);
  }
  return out;
}

/// p(c) = sum over chords x crossing c of sgn(x) * int_c(x).
inline int parity(const GaussDiagram& d, int c,
                  const IntConvention& conv = IntConvention::standard()) {
  const Chord& cc = d.chord(c);
  int p = 0;
  for (const auto& x : d.chords()) {
    if (x.label == c || !detail::chords_interleave(cc, x)) continue;
    p += x.sign * detail::int_value(cc, x, conv);
  }
  return p;
}

inline ParityMap parity_map(const GaussDiagram& d,
                            const IntConvention& conv = IntConvention::standard()) {
  ParityMap out;
  for (const auto& c : d.chords()) out.emplace(c.label, parity(d, c.label, conv));
  return out;
}

/// Parity composed with the projection Z -> Z_n; residues lie in 0..n-1.
inline std::map<int, int> parity_mod(const GaussDiagram& d, int n,
                                     const IntConvention& conv = IntConvention::standard()) {
  if (n < 2) throw BadModulus("modulus must be at least 2, got " + std::to_string(n));
  std::map<int, int> out;
  for (const auto& [label, p] : parity_map(d, conv)) out.emplace(label, ((p % n) + n) % n);
  return out;
}

namespace detail {

template <class Fn>
GaussDiagram modify_chord(const GaussDiagram& d, int c, Fn&& fn) {
  (void)d.chord(c);
  auto tokens = d.tokens();
  for (auto& t : tokens) {
    if (t.label == c) fn(t);
  }
  return GaussDiagram::from_tokens(std::move(tokens));
}

}  // namespace detail

/// Flips the sign and the orientation of chord c.
inline GaussDiagram crossing_change(const GaussDiagram& d, int c) {
  return detail::modify_chord(d, c, [](Token& t) {
    t.role = opposite(t.role);
    t.sign = -t.sign;
  });
}

/// Reverses the arrow of chord c; its sign is kept.
inline GaussDiagram orient_virtualize(const GaussDiagram& d, int c) {
  return detail::modify_chord(d, c, [](Token& t) { t.role = opposite(t.role); });
}

/// Flips the sign of chord c; its arrow is kept.
inline GaussDiagram sign_virtualize(const GaussDiagram& d, int c) {
  return detail::modify_chord(d, c, [](Token& t) { t.sign = -t.sign; });
}

}  // namespace vkp
