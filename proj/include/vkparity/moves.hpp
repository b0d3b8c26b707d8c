#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vkparity/errors.hpp"
#include "vkparity/gauss_diagram.hpp"
#include "vkparity/parity.hpp"
#include "vkparity/triangle_templates.hpp"

namespace vkp {

enum class MoveKind : std::uint8_t { r1_add, r1_remove, r2_add, r2_remove, r3 };

inline constexpr std::array<MoveKind, 5> all_move_kinds{MoveKind::r1_add, MoveKind::r1_remove,
                                                        MoveKind::r2_add, MoveKind::r2_remove,
                                                        MoveKind::r3};

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::r1_add: return "R1_add";
    case MoveKind::r1_remove: return "R1_remove";
    case MoveKind::r2_add: return "R2_add";
    case MoveKind::r2_remove: return "R2_remove";
    case MoveKind::r3: return "R3";
  }
  return "?";
}

inline std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (auto k : all_move_kinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

/// Decoration choices for insertions.
struct MoveParams {
  int sign = 1;             // R1_add: new chord; R2_add: the chord whose head comes first
  bool head_first = true;   // R1_add
  bool nested = false;      // R2_add: feet in reverse order of the heads
  bool under_first = false; // R2_add with equal gaps: feet pair placed before the heads pair

  friend bool operator==(const MoveParams&, const MoveParams&) = default;
};

/// A concrete applicable chord move.
///
/// site meaning by kind:
///   R1_add     {gap}                  insert before endpoint `gap`
///   R1_remove  {label}
///   R2_add     {head_gap, foot_gap}
///   R2_remove  {label_a, label_b}
///   R3         {p, q, r}              starts of the adjacent pairs (p, p+1 mod 2n)
/// variant is only used by R3: "3-0", "0-3", "2-1" or "1-2" (intersections
/// before and after the move).
struct MoveInstance {
  MoveKind kind = MoveKind::r1_add;
  std::vector<int> site;
  std::string variant;
  MoveParams params;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

namespace detail {

inline std::size_t gap_count(const GaussDiagram& d) { return std::max<std::size_t>(d.length(), 1); }

inline std::vector<Token> insert_at_gaps(const std::vector<Token>& base, std::size_t gap_a,
                                         const std::vector<Token>& a, std::size_t gap_b,
                                         const std::vector<Token>& b, bool b_first_on_tie) {
  std::vector<Token> out;
  out.reserve(base.size() + a.size() + b.size());
  for (std::size_t i = 0; i <= base.size(); ++i) {
    const bool here_a = i == gap_a;
    const bool here_b = i == gap_b;
    if (here_a && here_b && b_first_on_tie) {
      out.insert(out.end(), b.begin(), b.end());
      out.insert(out.end(), a.begin(), a.end());
    } else {
      if (here_a) out.insert(out.end(), a.begin(), a.end());
      if (here_b) out.insert(out.end(), b.begin(), b.end());
    }
    if (i < base.size()) out.push_back(base[i]);
  }
  return out;
}

inline std::vector<Token> remove_labels(const GaussDiagram& d, std::initializer_list<int> labels) {
  std::vector<Token> out;
  for (const auto& t : d.tokens()) {
    if (std::find(labels.begin(), labels.end(), t.label) == labels.end()) out.push_back(t);
  }
  return out;
}

inline bool r1_removable(const GaussDiagram& d, const Chord& c) {
  return !c.singular && cyclically_adjacent(c.head, c.foot, d.length());
}

inline bool r2_removable(const GaussDiagram& d, const Chord& a, const Chord& b) {
  if (a.label == b.label || a.singular || b.singular || a.sign != -b.sign) return false;
  const auto len = d.length();
  if (!cyclically_adjacent(a.head, b.head, len) || !cyclically_adjacent(a.foot, b.foot, len)) {
    return false;
  }
  // Every chord crossing the pair meets both with the same intersection number,
  // so the pair never changes any parity.
  for (const auto& c : d.chords()) {
    if (c.label == a.label || c.label == b.label) continue;
    const bool ca = chords_interleave(c, a);
    const bool cb = chords_interleave(c, b);
    if (ca != cb || (ca && int_value(c, a, IntConvention::standard()) !=
                               int_value(c, b, IntConvention::standard()))) {
      throw InternalError("two-chord site " + std::to_string(a.label) + "," +
                          std::to_string(b.label) + " is not parity neutral");
    }
  }
  return true;
}

struct TriangleSite {
  std::array<std::size_t, 3> starts{};
  TrianglePattern pattern;
};

inline std::optional<TrianglePattern> triangle_pattern_at(const GaussDiagram& d,
                                                          const std::array<std::size_t, 3>& starts) {
  const auto len = d.length();
  if (len < 6) return std::nullopt;
  std::array<std::size_t, 6> pos{};
  for (int k = 0; k < 3; ++k) {
    if (starts[k] >= len) return std::nullopt;
    pos[2 * k] = starts[k];
    pos[2 * k + 1] = (starts[k] + 1) % len;
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (pos[i] == pos[j]) return std::nullopt;
  std::array<int, 3> labels{-1, -1, -1};
  TrianglePattern p;
  for (int i = 0; i < 6; ++i) {
    const Endpoint& e = d.endpoints()[pos[i]];
    int s = 0;
    while (s < 3 && labels[s] != -1 && labels[s] != e.label) ++s;
    if (s == 3) return std::nullopt;
    labels[s] = e.label;
    p.slot[i] = static_cast<std::uint8_t>(s);
    p.role[i] = e.role;
  }
  if (labels[2] == -1) return std::nullopt;
  for (int k = 0; k < 3; ++k) {
    if (p.slot[2 * k] == p.slot[2 * k + 1]) return std::nullopt;
  }
  for (int s = 0; s < 3; ++s) {
    const Chord& c = d.chord(labels[s]);
    if (c.singular) return std::nullopt;
    p.sign[s] = c.sign;
  }
  return p;
}

inline std::string triangle_variant(int before) {
  return std::to_string(before) + "-" + std::to_string(3 - before);
}

inline std::vector<TriangleSite> triangle_sites(const GaussDiagram& d) {
  std::vector<TriangleSite> out;
  const auto chords = d.chords();
  const auto len = d.length();
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      for (std::size_t k = j + 1; k < chords.size(); ++k) {
        std::array<std::size_t, 6> q{chords[i].head, chords[i].foot, chords[j].head,
                                     chords[j].foot, chords[k].head, chords[k].foot};
        std::sort(q.begin(), q.end());
        const std::array<std::array<std::size_t, 3>, 2> partitions{
            {{q[0], q[2], q[4]}, {q[1], q[3], q[5]}}};
        for (const auto& starts : partitions) {
          bool adjacent = true;
          for (auto s : starts) {
            const auto next = (s + 1) % len;
            if (std::find(q.begin(), q.end(), next) == q.end() ||
                std::find(starts.begin(), starts.end(), next) != starts.end()) {
              adjacent = false;
            }
          }
          if (!adjacent) continue;
          auto p = triangle_pattern_at(d, starts);
          if (p && is_triangle_template(*p)) {
            auto sorted = starts;
            std::sort(sorted.begin(), sorted.end());
            out.push_back({sorted, *p});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// All applicable removal and triangle moves, followed by one insertion per
/// gap (or ordered gap pair) and decoration choice.
inline std::vector<MoveInstance> enumerate_moves(const GaussDiagram& d, bool include_insertions = true) {
  std::vector<MoveInstance> out;
  const auto chords = d.chords();
  for (const auto& c : chords) {
    if (detail::r1_removable(d, c)) out.push_back({MoveKind::r1_remove, {c.label}, {}, {}});
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (detail::r2_removable(d, chords[i], chords[j])) {
        out.push_back({MoveKind::r2_remove, {chords[i].label, chords[j].label}, {}, {}});
      }
    }
  }
  for (const auto& site : detail::triangle_sites(d)) {
    out.push_back({MoveKind::r3,
                   {static_cast<int>(site.starts[0]), static_cast<int>(site.starts[1]),
                    static_cast<int>(site.starts[2])},
                   detail::triangle_variant(triangle_intersections(site.pattern)),
                   {}});
  }
  if (!include_insertions) return out;
  const auto gaps = static_cast<int>(detail::gap_count(d));
  for (int g = 0; g < gaps; ++g) {
    for (int sign : {1, -1}) {
      for (bool head_first : {true, false}) {
        out.push_back({MoveKind::r1_add, {g}, {}, {sign, head_first, false, false}});
      }
    }
  }
  for (int gh = 0; gh < gaps; ++gh) {
    for (int gf = 0; gf < gaps; ++gf) {
      for (int sign : {1, -1}) {
        for (bool nested : {false, true}) {
          out.push_back({MoveKind::r2_add, {gh, gf}, {}, {sign, true, nested, false}});
          if (gh == gf) out.push_back({MoveKind::r2_add, {gh, gf}, {}, {sign, true, nested, true}});
        }
      }
    }
  }
  return out;
}

inline bool is_applicable(const GaussDiagram& d, const MoveInstance& m) {
  const auto gaps = static_cast<int>(detail::gap_count(d));
  auto gap_ok = [&](int g) { return g >= 0 && g < gaps; };
  auto sign_ok = [](int s) { return s == 1 || s == -1; };
  switch (m.kind) {
    case MoveKind::r1_add:
      return m.site.size() == 1 && gap_ok(m.site[0]) && sign_ok(m.params.sign);
    case MoveKind::r2_add:
      return m.site.size() == 2 && gap_ok(m.site[0]) && gap_ok(m.site[1]) &&
             sign_ok(m.params.sign) && (!m.params.under_first || m.site[0] == m.site[1]);
    case MoveKind::r1_remove:
      return m.site.size() == 1 && d.contains(m.site[0]) &&
             detail::r1_removable(d, d.chord(m.site[0]));
    case MoveKind::r2_remove:
      return m.site.size() == 2 && d.contains(m.site[0]) && d.contains(m.site[1]) &&
             detail::r2_removable(d, d.chord(m.site[0]), d.chord(m.site[1]));
    case MoveKind::r3: {
      if (m.site.size() != 3) return false;
      std::array<std::size_t, 3> starts{};
      for (int k = 0; k < 3; ++k) {
        if (m.site[k] < 0) return false;
        starts[k] = static_cast<std::size_t>(m.site[k]);
      }
      auto p = detail::triangle_pattern_at(d, starts);
      return p && is_triangle_template(*p) &&
             m.variant == detail::triangle_variant(triangle_intersections(*p));
    }
  }
  return false;
}

/// Rewrites d by m. Inserted chords receive fresh labels max_label()+1 onward.
inline GaussDiagram apply_move(const GaussDiagram& d, const MoveInstance& m) {
  if (!is_applicable(d, m)) throw InapplicableMove(to_string(m.kind) + " does not apply here");
  const int fresh = d.max_label() + 1;
  switch (m.kind) {
    case MoveKind::r1_add: {
      const Role first = m.params.head_first ? Role::head : Role::foot;
      std::vector<Token> kink{{fresh, first, m.params.sign, false},
                              {fresh, opposite(first), m.params.sign, false}};
      return GaussDiagram::from_tokens(detail::insert_at_gaps(
          d.tokens(), static_cast<std::size_t>(m.site[0]), kink, SIZE_MAX, {}, false));
    }
    case MoveKind::r2_add: {
      const int a = fresh;
      const int b = fresh + 1;
      const int sa = m.params.sign;
      std::vector<Token> heads{{a, Role::head, sa, false}, {b, Role::head, -sa, false}};
      std::vector<Token> feet{{a, Role::foot, sa, false}, {b, Role::foot, -sa, false}};
      if (m.params.nested) std::swap(feet[0], feet[1]);
      return GaussDiagram::from_tokens(detail::insert_at_gaps(
          d.tokens(), static_cast<std::size_t>(m.site[0]), heads,
          static_cast<std::size_t>(m.site[1]), feet, m.params.under_first));
    }
    case MoveKind::r1_remove:
      return GaussDiagram::from_tokens(detail::remove_labels(d, {m.site[0]}));
    case MoveKind::r2_remove:
      return GaussDiagram::from_tokens(detail::remove_labels(d, {m.site[0], m.site[1]}));
    case MoveKind::r3: {
      auto tokens = d.tokens();
      for (int s : m.site) {
        const auto p = static_cast<std::size_t>(s);
        std::swap(tokens[p], tokens[(p + 1) % tokens.size()]);
      }
      return GaussDiagram::from_tokens(std::move(tokens));
    }
  }
  throw InapplicableMove("unknown move kind");
}

/// An instance on apply_move(d, m) that restores d up to canonical_form.
inline MoveInstance inverse_move(const GaussDiagram& d, const MoveInstance& m) {
  const GaussDiagram after = apply_move(d, m);
  const int fresh = d.max_label() + 1;
  switch (m.kind) {
    case MoveKind::r1_add: return {MoveKind::r1_remove, {fresh}, {}, {}};
    case MoveKind::r2_add: return {MoveKind::r2_remove, {fresh, fresh + 1}, {}, {}};
    case MoveKind::r3: {
      const int before = std::stoi(m.variant.substr(0, 1));
      return {MoveKind::r3, m.site, detail::triangle_variant(3 - before), {}};
    }
    case MoveKind::r1_remove:
    case MoveKind::r2_remove: {
      const std::string target = canonical_form(d);
      const MoveKind want = m.kind == MoveKind::r1_remove ? MoveKind::r1_add : MoveKind::r2_add;
      for (const auto& cand : enumerate_moves(after)) {
        if (cand.kind == want && canonical_form(apply_move(after, cand)) == target) return cand;
      }
      throw InternalError("no insertion inverts " + to_string(m.kind));
    }
  }
  throw InternalError("unknown move kind");
}

struct WalkResult {
  GaussDiagram diagram;
  std::vector<MoveInstance> trace;
};

/// Applies `steps` random moves. Each step first picks a move kind uniformly
/// among the kinds that have an applicable instance, then an instance of that
/// kind uniformly. Insertions are suppressed once the diagram has max_chords
/// chords. Deterministic per seed.
inline WalkResult random_walk(const GaussDiagram& start, int steps, std::uint64_t seed,
                              std::size_t max_chords) {
  std::mt19937_64 rng(seed);
  WalkResult out{start, {}};
  out.trace.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  for (int s = 0; s < steps; ++s) {
    const bool allow_insert = out.diagram.size() < max_chords;
    auto moves = enumerate_moves(out.diagram, allow_insert);
    std::array<std::vector<std::size_t>, all_move_kinds.size()> by_kind;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      by_kind[static_cast<std::size_t>(moves[i].kind)].push_back(i);
    }
    std::vector<std::size_t> kinds;
    for (std::size_t k = 0; k < by_kind.size(); ++k) {
      if (!by_kind[k].empty()) kinds.push_back(k);
    }
    if (kinds.empty()) break;
    const auto kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    const auto& pool = by_kind[kind];
    const auto pick = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    out.diagram = apply_move(out.diagram, moves[pick]);
    out.trace.push_back(std::move(moves[pick]));
  }
  return out;
}

}  // namespace vkp
