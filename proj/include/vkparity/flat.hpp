#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vkparity/errors.hpp"
#include "vkparity/gauss_diagram.hpp"

namespace vkp {

/// Signed, oriented chords on several oriented circles; the result of smoothing.
class LinkGaussDiagram {
 public:
  struct ChordData {
    int label = 0;
    int sign = 1;
    bool singular = false;

    friend bool operator==(const ChordData&, const ChordData&) = default;
  };

  LinkGaussDiagram() : circles_(1) {}

  LinkGaussDiagram(std::vector<std::vector<Endpoint>> circles, std::vector<ChordData> chords)
      : circles_(std::move(circles)), chords_(std::move(chords)) {
    std::sort(chords_.begin(), chords_.end(),
              [](const ChordData& a, const ChordData& b) { return a.label < b.label; });
    check();
  }

  static LinkGaussDiagram from(const GaussDiagram& d) {
    std::vector<ChordData> chords;
    for (const auto& c : d.chords()) chords.push_back({c.label, c.sign, c.singular});
    return LinkGaussDiagram({std::vector<Endpoint>(d.endpoints().begin(), d.endpoints().end())},
                            std::move(chords));
  }

  const std::vector<std::vector<Endpoint>>& circles() const noexcept { return circles_; }
  const std::vector<ChordData>& chords() const noexcept { return chords_; }
  std::size_t size() const noexcept { return chords_.size(); }

  const ChordData& chord(int label) const {
    auto it = std::lower_bound(chords_.begin(), chords_.end(), label,
                               [](const ChordData& c, int l) { return c.label < l; });
    if (it == chords_.end() || it->label != label) throw UnknownLabel(label);
    return *it;
  }

  bool contains(int label) const noexcept {
    return std::binary_search(chords_.begin(), chords_.end(), ChordData{label, 1, false},
                              [](const ChordData& a, const ChordData& b) { return a.label < b.label; });
  }

  friend bool operator==(const LinkGaussDiagram&, const LinkGaussDiagram&) = default;

 private:
  void check() const {
    std::map<int, std::pair<int, int>> seen;  // label -> (#heads, #feet)
    for (const auto& circle : circles_) {
      for (const auto& e : circle) {
        auto& [h, f] = seen[e.label];
        (e.role == Role::head ? h : f) += 1;
      }
    }
    if (seen.size() != chords_.size()) {
      throw ValidationError("link diagram: chord table does not match endpoints");
    }
    for (const auto& c : chords_) {
      auto it = seen.find(c.label);
      if (it == seen.end() || it->second != std::pair{1, 1}) {
        throw ValidationError("link diagram: label " + std::to_string(c.label) +
                              " needs exactly one head and one foot");
      }
    }
  }

  std::vector<std::vector<Endpoint>> circles_;
  std::vector<ChordData> chords_;
};

inline std::string serialize(const LinkGaussDiagram& l) {
  std::string out;
  for (std::size_t c = 0; c < l.circles().size(); ++c) {
    if (c) out += " |";
    for (const auto& e : l.circles()[c]) {
      const auto& data = l.chord(e.label);
      if (!out.empty()) out += ' ';
      out += detail::token_text(Token{e.label, e.role, data.sign, data.singular});
    }
  }
  return out;
}

/// Unsigned, unoriented chords on several circles; the codomain of flattening.
struct FlatDiagram {
  std::vector<std::vector<int>> circles{std::vector<int>{}};

  std::size_t chord_count() const {
    std::size_t n = 0;
    for (const auto& c : circles) n += c.size();
    return n / 2;
  }

  friend bool operator==(const FlatDiagram&, const FlatDiagram&) = default;
};

inline void validate_flat(const FlatDiagram& f) {
  if (f.circles.empty()) throw ValidationError("flat diagram has no circles");
  std::map<int, int> count;
  for (const auto& c : f.circles) {
    for (int l : c) {
      if (l < 1) throw ValidationError("flat label " + std::to_string(l) + " is not positive");
      ++count[l];
    }
  }
  for (const auto& [l, n] : count) {
    if (n != 2) {
      throw ValidationError("flat label " + std::to_string(l) + " appears " + std::to_string(n) +
                            " times");
    }
  }
}

namespace detail {

// Vertical (orientation-respecting) smoothing at the chord with `label`:
// a chord on one circle splits it into the two arcs between its endpoints;
// a chord joining two circles merges them.
template <class T, class LabelOf>
std::vector<std::vector<T>> smooth_circles(const std::vector<std::vector<T>>& circles, int label,
                                           LabelOf label_of) {
  std::vector<std::pair<std::size_t, std::size_t>> at;
  for (std::size_t c = 0; c < circles.size(); ++c) {
    for (std::size_t p = 0; p < circles[c].size(); ++p) {
      if (label_of(circles[c][p]) == label) at.emplace_back(c, p);
    }
  }
  if (at.size() != 2) throw UnknownLabel(label);
  auto out = circles;
  const auto [ci, i] = at[0];
  const auto [cj, j] = at[1];
  if (ci == cj) {
    const auto& circ = circles[ci];
    std::vector<T> inner(circ.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                         circ.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<T> outer(circ.begin() + static_cast<std::ptrdiff_t>(j) + 1, circ.end());
    outer.insert(outer.end(), circ.begin(), circ.begin() + static_cast<std::ptrdiff_t>(i));
    out[ci] = std::move(inner);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(ci) + 1, std::move(outer));
  } else {
    const auto& a = circles[ci];
    const auto& b = circles[cj];
    std::vector<T> merged;
    merged.reserve(a.size() + b.size() - 2);
    for (std::size_t k = 1; k < a.size(); ++k) merged.push_back(a[(i + k) % a.size()]);
    for (std::size_t k = 1; k < b.size(); ++k) merged.push_back(b[(j + k) % b.size()]);
    out[ci] = std::move(merged);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(cj));
  }
  return out;
}

}  // namespace detail

inline LinkGaussDiagram smooth(const LinkGaussDiagram& l, int c) {
  const auto& data = l.chord(c);
  if (data.singular) throw SingularChord("cannot smooth singular chord " + std::to_string(c));
  auto circles = detail::smooth_circles(l.circles(), c, [](const Endpoint& e) { return e.label; });
  std::vector<LinkGaussDiagram::ChordData> chords;
  for (const auto& x : l.chords()) {
    if (x.label != c) chords.push_back(x);
  }
  return LinkGaussDiagram(std::move(circles), std::move(chords));
}

inline LinkGaussDiagram smooth(const GaussDiagram& d, int c) {
  return smooth(LinkGaussDiagram::from(d), c);
}

/// Smooths the given chords in increasing label order.
inline LinkGaussDiagram smooth_all(const GaussDiagram& d, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  auto l = LinkGaussDiagram::from(d);
  for (int c : labels) l = smooth(l, c);
  return l;
}

inline FlatDiagram smooth(const FlatDiagram& f, int c) {
  return FlatDiagram{detail::smooth_circles(f.circles, c, [](int l) { return l; })};
}

inline FlatDiagram flatten(const LinkGaussDiagram& l) {
  for (const auto& c : l.chords()) {
    if (c.singular) throw SingularChord("cannot flatten singular chord " + std::to_string(c.label));
  }
  FlatDiagram f;
  f.circles.clear();
  for (const auto& circle : l.circles()) {
    std::vector<int> labels;
    labels.reserve(circle.size());
    for (const auto& e : circle) labels.push_back(e.label);
    f.circles.push_back(std::move(labels));
  }
  return f;
}

inline FlatDiagram flatten(const GaussDiagram& d) { return flatten(LinkGaussDiagram::from(d)); }

/// Circles separated by "|", labels separated by spaces; no normalization.
inline std::string serialize(const FlatDiagram& f) {
  std::string out;
  for (std::size_t c = 0; c < f.circles.size(); ++c) {
    if (c) out += " | ";
    for (std::size_t i = 0; i < f.circles[c].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f.circles[c][i]);
    }
  }
  const auto b = out.find_first_not_of(' ');
  if (b == std::string::npos) return out.empty() ? out : std::string("|");
  const auto e = out.find_last_not_of(' ');
  return out.substr(b, e - b + 1);
}

inline FlatDiagram parse_flat(std::string_view text) {
  FlatDiagram f;
  f.circles.assign(1, {});
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '|') {
      f.circles.emplace_back();
      ++i;
    } else if (ch >= '0' && ch <= '9') {
      long long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000'000) throw ParseError("flat label too large");
        ++i;
      }
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '|') {
        throw ParseError(std::string("unexpected character '") + text[i] + "' in flat code");
      }
      f.circles.back().push_back(static_cast<int>(v));
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "' in flat code");
    }
  }
  validate_flat(f);
  return f;
}

namespace detail {

// Lexicographically minimal encoding over circle orders (circles sorted by
// length, permuted within equal lengths), rotations and first-occurrence
// relabeling. Labels are >= 1 and 0 terminates each circle.
inline std::vector<int> flat_key(const FlatDiagram& f) {
  const std::size_t k = f.circles.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return f.circles[a].size() < f.circles[b].size();
  });
  int max_label = 0;
  for (const auto& c : f.circles)
    for (int l : c) max_label = std::max(max_label, l);

  std::vector<int> relabel(static_cast<std::size_t>(max_label) + 1, 0);
  std::vector<int> cur;
  std::vector<int> best;
  std::vector<bool> used(k, false);
  int next = 0;

  auto prefix_greater = [&]() {
    if (best.empty()) return false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] != best[i]) return cur[i] > best[i];
    }
    return false;
  };

  auto dfs = [&](auto&& self, std::size_t slot) -> void {
    if (slot == k) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    const std::size_t want = f.circles[order[slot]].size();
    for (std::size_t ci = 0; ci < k; ++ci) {
      const auto& circ = f.circles[ci];
      if (used[ci] || circ.size() != want) continue;
      used[ci] = true;
      const std::size_t rotations = std::max<std::size_t>(circ.size(), 1);
      for (std::size_t r = 0; r < rotations; ++r) {
        const std::size_t mark = cur.size();
        const int saved_next = next;
        std::vector<int> assigned;
        for (std::size_t i = 0; i < circ.size(); ++i) {
          const int l = circ[(r + i) % circ.size()];
          if (relabel[l] == 0) {
            relabel[l] = ++next;
            assigned.push_back(l);
          }
          cur.push_back(relabel[l]);
        }
        cur.push_back(0);
        if (!prefix_greater()) self(self, slot + 1);
        cur.resize(mark);
        for (int l : assigned) relabel[l] = 0;
        next = saved_next;
      }
      used[ci] = false;
    }
  };
  dfs(dfs, 0);
  return best;
}

inline std::string key_to_code(const std::vector<int>& key) {
  FlatDiagram f;
  f.circles.clear();
  std::vector<int> circle;
  for (int v : key) {
    if (v == 0) {
      f.circles.push_back(std::move(circle));
      circle.clear();
    } else {
      circle.push_back(v);
    }
  }
  if (f.circles.empty()) f.circles.emplace_back();
  return serialize(f);
}

}  // namespace detail

/// Isomorphism-invariant serialization: minimal over circle orders, rotations
/// and relabeling. Performs no flat moves.
inline std::string flat_code(const FlatDiagram& f) { return detail::key_to_code(detail::flat_key(f)); }

// ---------------------------------------------------------------------------
// Flat moves.

namespace detail {

struct FlatPos {
  std::size_t circle;
  std::size_t pos;
};

inline std::map<int, std::array<FlatPos, 2>> flat_positions(const FlatDiagram& f) {
  std::map<int, std::array<FlatPos, 2>> out;
  std::map<int, int> seen;
  for (std::size_t c = 0; c < f.circles.size(); ++c) {
    for (std::size_t p = 0; p < f.circles[c].size(); ++p) {
      const int l = f.circles[c][p];
      out[l][seen[l]++] = {c, p};
    }
  }
  return out;
}

// True when b immediately follows a on the same circle.
inline bool follows(const FlatDiagram& f, FlatPos a, FlatPos b) {
  if (a.circle != b.circle) return false;
  const auto len = f.circles[a.circle].size();
  return len >= 2 && (a.pos + 1) % len == b.pos && a.pos != b.pos;
}

inline bool flat_adjacent(const FlatDiagram& f, FlatPos a, FlatPos b) {
  return follows(f, a, b) || follows(f, b, a);
}

inline FlatDiagram remove_flat_labels(const FlatDiagram& f, int a, int b) {
  FlatDiagram out;
  out.circles.clear();
  for (const auto& c : f.circles) {
    std::vector<int> kept;
    for (int l : c) {
      if (l != a && l != b) kept.push_back(l);
    }
    out.circles.push_back(std::move(kept));
  }
  return out;
}

}  // namespace detail

/// Chords whose endpoints are adjacent on one circle (flat single-chord move).
inline std::vector<int> flat_r1_sites(const FlatDiagram& f) {
  std::vector<int> out;
  for (const auto& [l, at] : detail::flat_positions(f)) {
    if (detail::flat_adjacent(f, at[0], at[1])) out.push_back(l);
  }
  return out;
}

/// Chord pairs whose endpoints form two adjacent pairs (flat two-chord move).
inline std::vector<std::pair<int, int>> flat_r2_sites(const FlatDiagram& f) {
  std::vector<std::pair<int, int>> out;
  const auto pos = detail::flat_positions(f);
  for (auto ia = pos.begin(); ia != pos.end(); ++ia) {
    for (auto ib = std::next(ia); ib != pos.end(); ++ib) {
      const auto& a = ia->second;
      const auto& b = ib->second;
      const bool straight =
          detail::flat_adjacent(f, a[0], b[0]) && detail::flat_adjacent(f, a[1], b[1]);
      const bool crossed =
          detail::flat_adjacent(f, a[0], b[1]) && detail::flat_adjacent(f, a[1], b[0]);
      if (straight || crossed) out.emplace_back(ia->first, ib->first);
    }
  }
  return out;
}

/// A flat triangle site: three adjacent position pairs (first, second) whose
/// endpoints belong to three chords, two per pair.
using FlatTriangle = std::array<std::pair<detail::FlatPos, detail::FlatPos>, 3>;

inline std::vector<FlatTriangle> flat_r3_sites(const FlatDiagram& f) {
  std::vector<FlatTriangle> out;
  const auto pos = detail::flat_positions(f);
  std::vector<int> labels;
  for (const auto& [l, at] : pos) labels.push_back(l);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      for (std::size_t k = j + 1; k < labels.size(); ++k) {
        std::map<std::size_t, std::vector<std::size_t>> per_circle;
        for (int l : {labels[i], labels[j], labels[k]}) {
          for (const auto& p : pos.at(l)) per_circle[p.circle].push_back(p.pos);
        }
        // Each circle offers up to two ways of cutting its positions into
        // cyclically consecutive pairs.
        std::vector<std::vector<std::vector<std::pair<detail::FlatPos, detail::FlatPos>>>> options;
        bool possible = true;
        for (auto& [c, ps] : per_circle) {
          std::sort(ps.begin(), ps.end());
          const auto m = ps.size();
          if (m % 2 != 0) {
            possible = false;
            break;
          }
          std::vector<std::vector<std::pair<detail::FlatPos, detail::FlatPos>>> opts;
          for (std::size_t shift = 0; shift < 2 && shift < m; ++shift) {
            std::vector<std::pair<detail::FlatPos, detail::FlatPos>> pairs;
            bool ok = true;
            for (std::size_t q = 0; q < m; q += 2) {
              detail::FlatPos a{c, ps[(q + shift) % m]};
              detail::FlatPos b{c, ps[(q + shift + 1) % m]};
              if (!detail::follows(f, a, b) || f.circles[c][a.pos] == f.circles[c][b.pos]) {
                ok = false;
                break;
              }
              pairs.emplace_back(a, b);
            }
            if (ok && (m != 2 || opts.empty())) opts.push_back(std::move(pairs));
          }
          if (opts.empty()) {
            possible = false;
            break;
          }
          options.push_back(std::move(opts));
        }
        if (!possible) continue;
        std::vector<std::size_t> choice(options.size(), 0);
        while (true) {
          std::vector<std::pair<detail::FlatPos, detail::FlatPos>> pairs;
          for (std::size_t o = 0; o < options.size(); ++o) {
            const auto& sel = options[o][choice[o]];
            pairs.insert(pairs.end(), sel.begin(), sel.end());
          }
          if (pairs.size() == 3) out.push_back({pairs[0], pairs[1], pairs[2]});
          std::size_t o = 0;
          while (o < options.size() && ++choice[o] == options[o].size()) choice[o++] = 0;
          if (o == options.size()) break;
        }
      }
    }
  }
  return out;
}

inline FlatDiagram apply_flat_r3(const FlatDiagram& f, const FlatTriangle& t) {
  FlatDiagram out = f;
  for (const auto& [a, b] : t) std::swap(out.circles[a.circle][a.pos], out.circles[b.circle][b.pos]);
  return out;
}

/// Greedily removes flat single-chord and two-chord configurations (lowest
/// labels first) until none remains.
inline FlatDiagram reduce_flat(FlatDiagram f) {
  while (true) {
    auto r1 = flat_r1_sites(f);
    if (!r1.empty()) {
      f = detail::remove_flat_labels(f, r1.front(), r1.front());
      continue;
    }
    auto r2 = flat_r2_sites(f);
    if (!r2.empty()) {
      f = detail::remove_flat_labels(f, r2.front().first, r2.front().second);
      continue;
    }
    return f;
  }
}

/// Budget-independent invariant of flat links under the flat moves: the
/// circle count and the sorted degrees of the graph joining two circles when
/// an odd number of chords runs between them.
inline std::string flat_signature(const FlatDiagram& f) {
  const auto k = f.circles.size();
  std::vector<std::vector<int>> between(k, std::vector<int>(k, 0));
  for (const auto& [l, at] : detail::flat_positions(f)) {
    if (at[0].circle != at[1].circle) {
      ++between[at[0].circle][at[1].circle];
      ++between[at[1].circle][at[0].circle];
    }
  }
  std::vector<int> degree(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (between[a][b] % 2 != 0) ++degree[a];
  std::sort(degree.begin(), degree.end());
  std::string s = "circles=" + std::to_string(k) + ";odd=";
  for (std::size_t i = 0; i < degree.size(); ++i) s += (i ? "," : "") + std::to_string(degree[i]);
  return s;
}

struct FlatOrbit {
  std::string best;                         // size-minimal code, ties by code
  std::unordered_set<std::string> visited;  // codes of every explored state
};

/// Reduces f, then explores triangle moves breadth first up to `r3_budget`
/// applications, reducing after each.
inline FlatOrbit flat_orbit(const FlatDiagram& f, int r3_budget) {
  FlatOrbit orbit;
  auto start = reduce_flat(parse_flat(flat_code(f)));
  std::string start_code = flat_code(start);
  std::size_t best_size = start.chord_count();
  orbit.best = start_code;
  orbit.visited.insert(start_code);
  std::queue<std::pair<FlatDiagram, int>> frontier;
  frontier.emplace(std::move(start), 0);
  while (!frontier.empty()) {
    auto [cur, depth] = std::move(frontier.front());
    frontier.pop();
    if (depth >= r3_budget) continue;
    for (const auto& site : flat_r3_sites(cur)) {
      auto next = reduce_flat(apply_flat_r3(cur, site));
      auto code = flat_code(next);
      if (!orbit.visited.insert(code).second) continue;
      const auto size = next.chord_count();
      if (size < best_size || (size == best_size && code < orbit.best)) {
        best_size = size;
        orbit.best = code;
      }
      frontier.emplace(std::move(next), depth + 1);
    }
  }
  return orbit;
}

inline constexpr int default_r3_budget = 4;

/// Canonical flat code under bounded normalization by the flat moves.
/// Idempotent: the orbit search is repeated from its own result until stable.
inline std::string canonical_flat(const FlatDiagram& f, int r3_budget = default_r3_budget) {
  thread_local std::unordered_map<std::string, std::string> cache;
  const std::string raw = flat_code(f);
  const std::string cache_key = std::to_string(r3_budget) + "#" + raw;
  if (auto it = cache.find(cache_key); it != cache.end()) return it->second;
  std::string code = raw;
  while (true) {
    auto next = flat_orbit(parse_flat(code), r3_budget).best;
    if (next == code) break;
    code = std::move(next);
  }
  if (cache.size() > 200'000) cache.clear();
  cache.emplace(cache_key, code);
  return code;
}

}  // namespace vkp
