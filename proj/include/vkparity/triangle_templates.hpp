#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "vkparity/gauss_diagram.hpp"

namespace vkp {

/// Local picture of a triangle-move site: three cyclically adjacent endpoint
/// pairs, read in circle order. `slot` names one of the three chords (0..2).
struct TrianglePattern {
  std::array<std::uint8_t, 6> slot{};
  std::array<Role, 6> role{};
  std::array<int, 3> sign{};  // indexed by slot
};

/// Rotation- and relabeling-independent encoding of a TrianglePattern.
using TriangleKey = std::array<std::int8_t, 9>;

/// Number of crossing chord pairs among the three chords of the pattern.
inline int triangle_intersections(const TrianglePattern& p) {
  std::array<std::array<int, 2>, 3> at{};
  std::array<int, 3> seen{};
  for (int i = 0; i < 6; ++i) at[p.slot[i]][seen[p.slot[i]]++] = i;
  auto between = [](int v, const std::array<int, 2>& c) { return c[0] < v && v < c[1]; };
  int count = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (between(at[b][0], at[a]) != between(at[b][1], at[a])) ++count;
    }
  }
  return count;
}

/// Swaps the two endpoints inside every pair; this is the triangle move itself.
inline TrianglePattern swap_pairs(TrianglePattern p) {
  for (int k = 0; k < 6; k += 2) {
    std::swap(p.slot[k], p.slot[k + 1]);
    std::swap(p.role[k], p.role[k + 1]);
  }
  return p;
}

inline TriangleKey triangle_key(const TrianglePattern& p) {
  TriangleKey best{};
  bool have = false;
  for (int r = 0; r < 3; ++r) {
    std::array<int, 3> fresh{-1, -1, -1};
    int next = 0;
    TriangleKey key{};
    for (int i = 0; i < 6; ++i) {
      const int src = (2 * r + i) % 6;
      const int s = p.slot[src];
      if (fresh[s] < 0) fresh[s] = next++;
      key[i] = static_cast<std::int8_t>(fresh[s] * 2 + (p.role[src] == Role::foot ? 1 : 0));
    }
    for (int s = 0; s < 3; ++s) key[6 + fresh[s]] = static_cast<std::int8_t>(p.sign[s]);
    if (!have || key < best) {
      best = key;
      have = true;
    }
  }
  return best;
}

namespace detail {

struct Vec2 {
  double x, y;
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Line2 {
  Vec2 p, d;
};

// Parameter t with a.p + t a.d on line b.
inline double meet(const Line2& a, const Line2& b) {
  return cross({b.p.x - a.p.x, b.p.y - a.p.y}, b.d) / cross(a.d, b.d);
}

// Three oriented strands at heights 2 (top), 1 (middle), 0 (bottom). Returns
// the Gauss patterns for both cyclic orders of the strand arcs on the circle.
inline std::array<TrianglePattern, 2> strand_patterns(const std::array<Line2, 3>& lines,
                                                      const std::array<int, 3>& height) {
  // Crossing slot for an unordered line pair.
  auto slot_of = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return a == 0 ? (b == 1 ? 0 : 1) : 2;
  };
  std::array<int, 3> sign{};
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const int over = height[a] > height[b] ? a : b;
      const int under = over == a ? b : a;
      sign[slot_of(a, b)] = cross(lines[over].d, lines[under].d) > 0 ? 1 : -1;
    }
  }
  // Endpoints along each strand in traversal order.
  std::array<std::array<std::pair<int, Role>, 2>, 3> arc{};
  for (int a = 0; a < 3; ++a) {
    std::vector<std::pair<double, int>> hits;
    for (int b = 0; b < 3; ++b) {
      if (b != a) hits.emplace_back(meet(lines[a], lines[b]), b);
    }
    std::sort(hits.begin(), hits.end());
    for (int k = 0; k < 2; ++k) {
      const int b = hits[k].second;
      arc[a][k] = {slot_of(a, b), height[a] > height[b] ? Role::head : Role::foot};
    }
  }
  std::array<int, 3> by_height{};
  for (int a = 0; a < 3; ++a) by_height[2 - height[a]] = a;  // top, middle, bottom
  const std::array<std::array<int, 3>, 2> orders{{{by_height[0], by_height[1], by_height[2]},
                                                   {by_height[0], by_height[2], by_height[1]}}};
  std::array<TrianglePattern, 2> out{};
  for (int o = 0; o < 2; ++o) {
    TrianglePattern& p = out[o];
    p.sign = sign;
    int i = 0;
    for (int strand : orders[o]) {
      for (int k = 0; k < 2; ++k, ++i) {
        p.slot[i] = static_cast<std::uint8_t>(arc[strand][k].first);
        p.role[i] = arc[strand][k].second;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Every legal triangle-move configuration, keyed by TriangleKey, mapped to
/// its number of crossing chord pairs (3 or 0, 2 or 1).
///
/// Generated from three oriented lines in the plane: every assignment of
/// top/middle/bottom heights and every choice of directions, on both sides of
/// sliding one line across the meeting point of the other two, and for both
/// cyclic orders of the three strand arcs on the circle.
inline const std::map<TriangleKey, int>& triangle_templates() {
  static const std::map<TriangleKey, int> table = [] {
    std::map<TriangleKey, int> out;
    std::array<int, 3> height{0, 1, 2};
    do {
      for (int dirs = 0; dirs < 8; ++dirs) {
        const double s0 = (dirs & 1) ? -1.0 : 1.0;
        const double s1 = (dirs & 2) ? -1.0 : 1.0;
        const double s2 = (dirs & 4) ? -1.0 : 1.0;
        for (double y0 : {0.0, 2.0}) {
          const std::array<detail::Line2, 3> lines{{{{0.0, y0}, {s0, 0.0}},
                                                    {{0.0, 0.0}, {s1, s1}},
                                                    {{0.0, 2.0}, {s2, -s2}}}};
          for (const auto& p : detail::strand_patterns(lines, height)) {
            out.emplace(triangle_key(p), triangle_intersections(p));
          }
        }
      }
    } while (std::next_permutation(height.begin(), height.end()));
    return out;
  }();
  return table;
}

inline bool is_triangle_template(const TrianglePattern& p) {
  return triangle_templates().contains(triangle_key(p));
}

}  // namespace vkp
