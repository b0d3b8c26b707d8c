#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vkparity/errors.hpp"

namespace vkp {

/// Head is the overpass endpoint ("O"), foot the underpass endpoint ("U").
enum class Role : std::uint8_t { head, foot };

constexpr Role opposite(Role r) noexcept { return r == Role::head ? Role::foot : Role::head; }

/// One decorated symbol of a Gauss code, e.g. `O3-` or `U1+!`.
struct Token {
  int label = 0;
  Role role = Role::head;
  int sign = 1;
  bool singular = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Endpoint {
  int label = 0;
  Role role = Role::head;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Chord {
  int label = 0;
  int sign = 1;
  /// A singular chord stores the data of its positive resolution.
  bool singular = false;
  std::size_t head = 0;
  std::size_t foot = 0;

  friend bool operator==(const Chord&, const Chord&) = default;
};

struct Violation {
  std::string kind;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

namespace detail {

inline std::string token_text(const Token& t) {
  std::string s;
  s += t.role == Role::head ? 'O' : 'U';
  s += std::to_string(t.label);
  s += t.sign > 0 ? '+' : '-';
  if (t.singular) s += '!';
  return s;
}

inline bool cyclically_adjacent(std::size_t a, std::size_t b, std::size_t len) {
  if (len < 2) return false;
  return (a + 1) % len == b || (b + 1) % len == a;
}

}  // namespace detail

/// Checks a raw token sequence against the Gauss-diagram invariants.
/// Returns an empty list iff the sequence describes a valid diagram.
inline std::vector<Violation> validate(std::span<const Token> tokens) {
  std::vector<Violation> out;
  std::map<int, std::vector<const Token*>> by_label;
  for (const auto& t : tokens) {
    if (t.label < 1) {
      out.push_back({"bad label", "label " + std::to_string(t.label) + " is not positive"});
      continue;
    }
    if (t.sign != 1 && t.sign != -1) {
      out.push_back({"bad sign", "label " + std::to_string(t.label) + " has sign " +
                                     std::to_string(t.sign)});
    }
    by_label[t.label].push_back(&t);
  }
  for (const auto& [label, occ] : by_label) {
    const std::string name = "label " + std::to_string(label);
    if (occ.size() != 2) {
      out.push_back({"label multiplicity",
                     name + " appears " + std::to_string(occ.size()) + " times"});
      continue;
    }
    if (occ[0]->role == occ[1]->role) {
      out.push_back({"role mismatch", name + " needs exactly one O and one U"});
    }
    if (occ[0]->sign != occ[1]->sign) {
      out.push_back({"sign mismatch", name + " carries different signs"});
    }
    if (occ[0]->singular != occ[1]->singular) {
      out.push_back({"singular mismatch", name + " is marked singular on one token only"});
    } else if (occ[0]->singular && occ[0]->sign < 0) {
      out.push_back({"singular sign", name + " is singular but not stored as its positive "
                                             "resolution"});
    }
  }
  return out;
}

/// One clockwise oriented circle carrying signed, oriented chords.
///
/// Endpoint positions are dense (0..2n-1) and the chord table is kept sorted by
/// label, so arc-membership tests and label lookups are cheap. Instances are
/// immutable once built; every rewrite produces a new value.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Throws ValidationError listing every violated invariant.
  static GaussDiagram from_tokens(std::vector<Token> tokens) {
    auto violations = validate(tokens);
    if (!violations.empty()) {
      std::string msg = "invalid Gauss diagram:";
      for (const auto& v : violations) msg += " [" + v.kind + ": " + v.detail + "]";
      throw ValidationError(msg);
    }
    GaussDiagram d;
    d.endpoints_.reserve(tokens.size());
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
      const Token& t = tokens[pos];
      d.endpoints_.push_back({t.label, t.role});
      auto it = std::lower_bound(d.chords_.begin(), d.chords_.end(), t.label,
                                 [](const Chord& c, int l) { return c.label < l; });
      if (it == d.chords_.end() || it->label != t.label) {
        it = d.chords_.insert(it, Chord{t.label, t.sign, t.singular, 0, 0});
      }
      (t.role == Role::head ? it->head : it->foot) = pos;
    }
    return d;
  }

  std::size_t size() const noexcept { return chords_.size(); }
  bool empty() const noexcept { return chords_.empty(); }
  std::size_t length() const noexcept { return endpoints_.size(); }

  std::span<const Endpoint> endpoints() const noexcept { return endpoints_; }
  /// Sorted by label.
  std::span<const Chord> chords() const noexcept { return chords_; }

  bool contains(int label) const noexcept { return find(label) != nullptr; }

  const Chord& chord(int label) const {
    const Chord* c = find(label);
    if (c == nullptr) throw UnknownLabel(label);
    return *c;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(chords_.size());
    for (const auto& c : chords_) out.push_back(c.label);
    return out;
  }

  int max_label() const noexcept { return chords_.empty() ? 0 : chords_.back().label; }

  Token token_at(std::size_t pos) const {
    const Endpoint& e = endpoints_.at(pos);
    const Chord& c = chord(e.label);
    return Token{e.label, e.role, c.sign, c.singular};
  }

  std::vector<Token> tokens() const {
    std::vector<Token> out;
    out.reserve(endpoints_.size());
    for (std::size_t i = 0; i < endpoints_.size(); ++i) out.push_back(token_at(i));
    return out;
  }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  const Chord* find(int label) const noexcept {
    auto it = std::lower_bound(chords_.begin(), chords_.end(), label,
                               [](const Chord& c, int l) { return c.label < l; });
    return it != chords_.end() && it->label == label ? &*it : nullptr;
  }

  std::vector<Endpoint> endpoints_;
  std::vector<Chord> chords_;
};

/// Re-checks the stored representation (used as a post-condition on rewrites).
inline std::vector<Violation> validate(const GaussDiagram& d) {
  auto tokens = d.tokens();
  auto out = validate(std::span<const Token>(tokens));
  for (const auto& c : d.chords()) {
    if (c.head >= d.length() || c.foot >= d.length() ||
        d.endpoints()[c.head] != Endpoint{c.label, Role::head} ||
        d.endpoints()[c.foot] != Endpoint{c.label, Role::foot}) {
      out.push_back({"position index", "chord " + std::to_string(c.label) +
                                           " does not match its endpoints"});
    }
  }
  return out;
}

/// Parses whitespace separated tokens `("O"|"U") label ("+"|"-") ["!"]`.
inline std::vector<Token> parse_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t index = 0;
  auto fail = [&](std::string_view tok, const std::string& why) {
    throw ParseError("token " + std::to_string(index) + " '" + std::string(tok) + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    Token t;
    std::size_t k = 0;
    if (tok[k] == 'O') {
      t.role = Role::head;
    } else if (tok[k] == 'U') {
      t.role = Role::foot;
    } else {
      fail(tok, "expected 'O' or 'U'");
    }
    ++k;
    std::size_t digits = k;
    long long label = 0;
    while (k < tok.size() && tok[k] >= '0' && tok[k] <= '9') {
      label = label * 10 + (tok[k] - '0');
      if (label > std::numeric_limits<int>::max()) fail(tok, "label too large");
      ++k;
    }
    if (k == digits) fail(tok, "missing label");
    if (label < 1) fail(tok, "label must be at least 1");
    t.label = static_cast<int>(label);
    if (k >= tok.size()) fail(tok, "missing sign");
    if (tok[k] == '+') {
      t.sign = 1;
    } else if (tok[k] == '-') {
      t.sign = -1;
    } else {
      fail(tok, "expected '+' or '-'");
    }
    ++k;
    if (k < tok.size() && tok[k] == '!') {
      t.singular = true;
      ++k;
    }
    if (k != tok.size()) fail(tok, "trailing characters");
    tokens.push_back(t);
    ++index;
  }
  return tokens;
}

inline GaussDiagram parse_gauss_code(std::string_view text) {
  return GaussDiagram::from_tokens(parse_tokens(text));
}

inline std::string serialize(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += detail::token_text(t);
  }
  return out;
}

inline std::string serialize(const GaussDiagram& d) {
  auto tokens = d.tokens();
  return serialize(std::span<const Token>(tokens));
}

/// Moves the basepoint forward by k endpoints.
inline GaussDiagram rotate(const GaussDiagram& d, std::size_t k) {
  auto tokens = d.tokens();
  if (!tokens.empty()) {
    std::rotate(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(k % tokens.size()),
                tokens.end());
  }
  return GaussDiagram::from_tokens(std::move(tokens));
}

/// Renumbers chords 1..n by first occurrence.
inline std::vector<Token> relabel_by_first_occurrence(std::vector<Token> tokens) {
  std::map<int, int> fresh;
  for (auto& t : tokens) {
    auto [it, inserted] = fresh.try_emplace(t.label, static_cast<int>(fresh.size()) + 1);
    t.label = it->second;
  }
  return tokens;
}

/// Basepoint- and label-independent form: the minimal serialization over all
/// rotations, after renumbering chords by first occurrence.
inline std::string canonical_form(const GaussDiagram& d) {
  const auto base = d.tokens();
  const std::size_t len = base.size();
  if (len == 0) return {};
  auto encode = [](const std::vector<Token>& ts) {
    std::vector<std::uint64_t> key;
    key.reserve(ts.size());
    for (const auto& t : ts) {
      key.push_back((static_cast<std::uint64_t>(t.label) << 3) |
                    (t.role == Role::foot ? 4u : 0u) | (t.sign < 0 ? 2u : 0u) |
                    (t.singular ? 1u : 0u));
    }
    return key;
  };
  std::vector<Token> best;
  std::vector<std::uint64_t> best_key;
  std::vector<Token> rotated(len);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t i = 0; i < len; ++i) rotated[i] = base[(r + i) % len];
    auto relabeled = relabel_by_first_occurrence(rotated);
    auto key = encode(relabeled);
    if (best.empty() || key < best_key) {
      best = std::move(relabeled);
      best_key = std::move(key);
    }
  }
  return serialize(std::span<const Token>(best));
}

struct DiagramSeedSpec {
  std::size_t chord_count = 0;
  std::uint64_t seed = 0;
};

/// Uniform random perfect matching of 2n positions with independent uniform
/// orientation and sign per chord. Deterministic per spec.
inline GaussDiagram random_diagram(const DiagramSeedSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const std::size_t len = 2 * spec.chord_count;
  std::vector<std::size_t> slots(len);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<Token> tokens(len);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t c = 0; c < spec.chord_count; ++c) {
    const int label = static_cast<int>(c) + 1;
    const int sign = coin(rng) ? 1 : -1;
    const bool flip = coin(rng);
    tokens[slots[2 * c]] = Token{label, flip ? Role::foot : Role::head, sign, false};
    tokens[slots[2 * c + 1]] = Token{label, flip ? Role::head : Role::foot, sign, false};
  }
  return GaussDiagram::from_tokens(std::move(tokens));
}

}  // namespace vkp
