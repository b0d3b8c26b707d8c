#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "vkparity/formal_sum.hpp"
#include "vkparity/gauss_diagram.hpp"
#include "vkparity/invariants.hpp"
#include "vkparity/moves.hpp"
#include "vkparity/vassiliev.hpp"

namespace vkp {

struct FuzzConfig {
  std::size_t seeds = 100;
  std::uint64_t base_seed = 1;
  int steps = 50;
  std::size_t size = 6;  // start diagrams have 0..size chords; insertions stop at this size
  int max_index = 4;
  int max_order = 2;
  int r3_budget = default_r3_budget;
  bool check_sums = true;
  bool check_degree = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Outcome counts of comparing one formal-sum invariant along walks.
struct SumStats {
  std::size_t comparisons = 0;
  std::size_t unknown = 0;
  std::map<std::string, std::size_t> unequal_by_move;  // move kind -> count

  std::size_t unequal() const {
    std::size_t n = 0;
    for (const auto& [kind, c] : unequal_by_move) n += c;
    return n;
  }
};

struct FuzzReport {
  std::size_t walks = 0;
  std::size_t steps = 0;
  std::size_t profile_failures = 0;
  std::map<std::string, SumStats> sums;  // keyed "S_1", "S_(1,2)"
  std::size_t degree_subsets = 0;
  std::size_t degree_unequal = 0;
  std::size_t degree_unknown = 0;
  std::vector<std::string> failures;  // first few, human readable

  /// Profile invariance and degree vanishing; sum comparisons are reported
  /// separately.
  bool ok() const noexcept { return profile_failures == 0 && degree_unequal == 0; }

  FuzzReport& operator+=(const FuzzReport& o) {
    walks += o.walks;
    steps += o.steps;
    profile_failures += o.profile_failures;
    for (const auto& [name, st] : o.sums) {
      auto& mine = sums[name];
      mine.comparisons += st.comparisons;
      mine.unknown += st.unknown;
      for (const auto& [kind, c] : st.unequal_by_move) mine.unequal_by_move[kind] += c;
    }
    degree_subsets += o.degree_subsets;
    degree_unequal += o.degree_unequal;
    degree_unknown += o.degree_unknown;
    for (const auto& f : o.failures) {
      if (failures.size() < 20) failures.push_back(f);
    }
    return *this;
  }
};

/// Starting diagram of walk number `index`.
inline GaussDiagram fuzz_start(const FuzzConfig& cfg, std::size_t index) {
  const std::uint64_t seed = cfg.base_seed * 0x9E3779B97F4A7C15ull + index;
  std::mt19937_64 rng(seed);
  const auto n = std::uniform_int_distribution<std::size_t>(0, cfg.size)(rng);
  return random_diagram({n, rng()});
}

inline FuzzReport fuzz_one(const FuzzConfig& cfg, std::size_t index) {
  FuzzReport r;
  r.walks = 1;
  const GaussDiagram start = fuzz_start(cfg, index);
  const auto profile = invariant_profile(start, cfg.max_index, cfg.max_order);
  const TupleSpec pair{{1, 2}};
  FormalSum cur1;
  FormalSum cur12;
  if (cfg.check_sums) {
    cur1 = s_index(start, 1, cfg.r3_budget);
    cur12 = s_tuple(start, pair, cfg.r3_budget);
  }
  auto note = [&](const std::string& what, const GaussDiagram& at) {
    if (r.failures.size() < 20) {
      r.failures.push_back("walk " + std::to_string(index) + ": " + what + " at \"" +
                           serialize(at) + "\" from \"" + serialize(start) + "\"");
    }
  };
  auto compare = [&](const FormalSum& a, const FormalSum& b, const GaussDiagram& at,
                     const char* name, MoveKind kind) {
    auto& st = r.sums[name];
    ++st.comparisons;
    switch (sum_compare(a, b, cfg.r3_budget)) {
      case Comparison::equal: break;
      case Comparison::unknown: ++st.unknown; break;
      case Comparison::unequal:
        ++st.unequal_by_move[to_string(kind)];
        note(std::string(name) + " changed by " + to_string(kind), at);
        break;
    }
  };

  const auto walk = random_walk(start, cfg.steps, cfg.base_seed ^ (index * 0xD1B54A32D192ED03ull),
                                std::max<std::size_t>(cfg.size, 1));
  GaussDiagram cur = start;
  for (const auto& m : walk.trace) {
    cur = apply_move(cur, m);
    ++r.steps;
    if (invariant_profile(cur, cfg.max_index, cfg.max_order) != profile) {
      ++r.profile_failures;
      note("profile changed by " + to_string(m.kind), cur);
    }
    if (cfg.check_sums) {
      auto next1 = s_index(cur, 1, cfg.r3_budget);
      auto next12 = s_tuple(cur, pair, cfg.r3_budget);
      compare(cur1, next1, cur, "S_1", m.kind);
      compare(cur12, next12, cur, "S_(1,2)", m.kind);
      cur1 = std::move(next1);
      cur12 = std::move(next12);
    }
  }

  if (cfg.check_degree && start.size() >= 2) {
    const SumFunctional f1 = [&](const GaussDiagram& k) { return s_index(k, 1, cfg.r3_budget); };
    const SumFunctional f12 = [&](const GaussDiagram& k) { return s_tuple(k, pair, cfg.r3_budget); };
    auto tally = [&](const DegreeReport& rep, const char* name) {
      r.degree_subsets += rep.subsets.size();
      r.degree_unequal += rep.count(Comparison::unequal);
      r.degree_unknown += rep.count(Comparison::unknown);
      if (rep.count(Comparison::unequal) > 0) note(std::string(name) + " degree check failed", start);
    };
    tally(degree_check(f1, start, 2, true, 0, 0, cfg.r3_budget), "S_1");
    if (start.size() >= 3) tally(degree_check(f12, start, 3, true, 0, 0, cfg.r3_budget), "S_(1,2)");
  }
  return r;
}

/// Runs cfg.seeds independent walks, distributed over worker threads.
inline FuzzReport run_fuzz(const FuzzConfig& cfg) {
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(cfg.seeds, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<FuzzReport> partial(workers);
  std::vector<std::string> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < cfg.seeds; i = next++) partial[w] += fuzz_one(cfg, i);
    } catch (const std::exception& e) {
      errors[w] = e.what();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  FuzzReport total;
  for (const auto& p : partial) total += p;
  for (const auto& e : errors) {
    if (!e.empty()) throw InternalError("fuzz worker failed: " + e);
  }
  return total;
}

}  // namespace vkp
