#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vkparity/fuzz.hpp"
#include "vkparity/json_io.hpp"
#include "vkparity/vkparity.hpp"

namespace vkp::cli {

enum ExitCode : int { ok = 0, parse_error = 1, invalid_diagram = 2, internal_failure = 3 };

struct CliConfig {
  std::string subcommand;
  std::vector<std::string> codes;
  std::string file;
  int max_index = 4;
  int max_order = 2;
  int r3_budget = default_r3_budget;
  std::uint64_t seed = 1;
  int steps = 50;
  std::size_t size = 6;
  std::size_t seeds = 100;
  std::string chords;
  std::string z = "1";
  int sing = 2;
  std::string move;
  int modulus = 0;
  bool insertions = true;
  bool json = false;
};

namespace detail {

inline std::vector<std::string> read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    out.push_back(line);
  }
  return out;
}

inline std::vector<int> parse_labels(const std::string& text) {
  if (text.empty()) return {};
  return parse_tuple(text).z;
}

inline std::string signed_coeff(std::int64_t c) { return (c > 0 ? "+" : "") + std::to_string(c); }

inline void print_sum(std::ostream& out, const FormalSum& s) {
  if (s.is_zero()) {
    out << "0\n";
    return;
  }
  for (const auto& [code, c] : s.terms()) out << signed_coeff(c) << " [" << code << "]\n";
}

inline SumFunctional functional_for(const TupleSpec& z, int budget) {
  if (z.z.size() == 1) {
    const int i = z.z.front();
    if (i < 1) throw BadIndex("S_i is only defined for i >= 1");
    return [i, budget](const GaussDiagram& k) { return s_index(k, i, budget); };
  }
  check_v_tuple(z);
  return [z, budget](const GaussDiagram& k) { return s_tuple(k, z, budget); };
}

// Runs one per-code subcommand; returns its exit status.
inline int run_code(const CliConfig& cfg, const std::string& code, std::ostream& out) {
  const GaussDiagram d = parse_gauss_code(code);
  const auto& cmd = cfg.subcommand;
  if (cmd == "parity") {
    if (cfg.modulus != 0) {
      const auto m = parity_mod(d, cfg.modulus);
      if (cfg.json) {
        out << parity_to_json(m).dump() << "\n";
      } else {
        for (const auto& [l, r] : m) out << l << ": " << r << " (mod " << cfg.modulus << ")\n";
      }
      return ok;
    }
    const auto m = parity_map(d);
    if (cfg.json) {
      out << parity_to_json(m).dump() << "\n";
    } else {
      for (const auto& [l, p] : m) out << l << ": " << p << "\n";
    }
    return ok;
  }
  if (cmd == "invariants") {
    const auto prof = invariant_profile(d, cfg.max_index, cfg.max_order);
    if (cfg.json) {
      out << profile_to_json(prof).dump() << "\n";
      return ok;
    }
    out << "A:";
    for (const auto& [i, v] : prof.a_signed) out << " " << i << "=" << v;
    out << "\nV:";
    for (const auto& [i, v] : prof.v_signed) out << " " << i << "=" << v;
    out << "\nVZ:";
    for (const auto& [t, v] : prof.v_tuple) out << " (" << to_string(t) << ")=" << v;
    out << "\n";
    return ok;
  }
  if (cmd == "smooth") {
    const auto link = smooth_all(d, parse_labels(cfg.chords));
    const auto flat = canonical_flat(flatten(link), cfg.r3_budget);
    if (cfg.json) {
      out << json{{"link", serialize(link)}, {"flat", flat}}.dump() << "\n";
    } else {
      out << "link: " << serialize(link) << "\nflat: " << flat << "\n";
    }
    return ok;
  }
  if (cmd == "vassiliev") {
    const auto s = functional_for(parse_tuple(cfg.z), cfg.r3_budget)(d);
    if (cfg.json) {
      out << sum_to_json(s).dump() << "\n";
    } else {
      print_sum(out, s);
    }
    return ok;
  }
  if (cmd == "degree") {
    const auto rep = degree_check(functional_for(parse_tuple(cfg.z), cfg.r3_budget), d, cfg.sing,
                                  true, 0, cfg.seed, cfg.r3_budget);
    const auto zero = rep.count(Comparison::equal);
    const auto unknown = rep.count(Comparison::unknown);
    const auto unequal = rep.count(Comparison::unequal);
    if (cfg.json) {
      out << json{{"subsets", rep.subsets.size()}, {"zero", zero}, {"unknown", unknown}, {"unequal", unequal}}.dump()
          << "\n";
    } else {
      out << "subsets: " << rep.subsets.size() << "\nzero: " << zero << "\nunknown: " << unknown
          << "\nunequal: " << unequal << "\n";
    }
    return unequal == 0 ? ok : internal_failure;
  }
  if (cmd == "moves") {
    const auto moves = enumerate_moves(d, cfg.insertions);
    if (cfg.json) {
      json arr = json::array();
      for (const auto& m : moves) arr.push_back(move_to_json(m));
      out << arr.dump() << "\n";
    } else {
      for (const auto& m : moves) out << move_to_json(m).dump() << "\n";
    }
    return ok;
  }
  if (cmd == "apply") {
    json j;
    try {
      j = json::parse(cfg.move);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad move JSON: ") + e.what());
    }
    MoveInstance m;
    try {
      m = move_from_json(j);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad move JSON: ") + e.what());
    }
    const auto after = apply_move(d, m);
    const bool same = invariant_profile(d, cfg.max_index, cfg.max_order) ==
                      invariant_profile(after, cfg.max_index, cfg.max_order);
    if (cfg.json) {
      out << json{{"code", serialize(after)}, {"profile_unchanged", same}}.dump() << "\n";
    } else {
      out << serialize(after) << "\n";
    }
    return same ? ok : internal_failure;
  }
  if (cmd == "canon") {
    const auto c = canonical_form(d);
    if (cfg.json) {
      out << json(c).dump() << "\n";
    } else {
      out << c << "\n";
    }
    return ok;
  }
  throw InternalError("unhandled subcommand " + cmd);
}

inline int run_fuzz_command(const CliConfig& cfg, std::ostream& out) {
  FuzzConfig fc;
  fc.seeds = cfg.seeds;
  fc.base_seed = cfg.seed;
  fc.steps = cfg.steps;
  fc.size = cfg.size;
  fc.max_index = cfg.max_index;
  fc.max_order = cfg.max_order;
  fc.r3_budget = cfg.r3_budget;
  const auto rep = run_fuzz(fc);
  if (cfg.json) {
    json sums = json::object();
    for (const auto& [name, st] : rep.sums) {
      sums[name] = {{"comparisons", st.comparisons},
                    {"unknown", st.unknown},
                    {"unequal", st.unequal()},
                    {"unequal_by_move", st.unequal_by_move}};
    }
    out << json{{"walks", rep.walks},
                {"steps", rep.steps},
                {"profile_failures", rep.profile_failures},
                {"sums", sums},
                {"degree_subsets", rep.degree_subsets},
                {"degree_unequal", rep.degree_unequal},
                {"degree_unknown", rep.degree_unknown},
                {"failures", rep.failures},
                {"ok", rep.ok()}}
               .dump()
        << "\n";
  } else {
    out << "walks: " << rep.walks << "\nsteps: " << rep.steps
        << "\nprofile failures: " << rep.profile_failures << "\n";
    for (const auto& [name, st] : rep.sums) {
      out << name << ": " << st.comparisons << " comparisons, " << st.unknown << " unknown, "
          << st.unequal() << " unequal";
      for (const auto& [kind, c] : st.unequal_by_move) out << " [" << kind << ": " << c << "]";
      out << "\n";
    }
    out << "degree subsets: " << rep.degree_subsets << " (" << rep.degree_unequal << " unequal, "
        << rep.degree_unknown << " unknown)\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
  }
  return rep.ok() ? ok : internal_failure;
}

}  // namespace detail

/// Parses args (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Parity invariants of Gauss diagrams", "vkparity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "emit JSON");
  app.add_option("--max-index", cfg.max_index, "largest parity index in profiles")->check(CLI::PositiveNumber);
  app.add_option("--max-order", cfg.max_order, "longest tuple in profiles")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.r3_budget, "flat triangle-move search depth")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--steps", cfg.steps, "moves per walk")->check(CLI::NonNegativeNumber);
  app.add_option("--size", cfg.size, "largest chord count in fuzz diagrams");
  app.add_option("--file", cfg.file, "read codes from a file, one per line");

  auto code_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("code", cfg.codes, "Gauss code");
    return sub;
  };
  auto* parity_cmd = code_command("parity", "parity of every chord");
  parity_cmd->add_option("--mod", cfg.modulus, "reduce modulo n");
  code_command("invariants", "signed cardinalities |A_i|, |V_i|, |V_Z|");
  code_command("smooth", "smooth chords and flatten")
      ->add_option("--chords", cfg.chords, "comma separated labels")
      ->required();
  code_command("vassiliev", "formal sum S_i or S_Z")->add_option("--Z", cfg.z, "index or tuple, e.g. 1,2");
  auto* degree_cmd = code_command("degree", "check vanishing on singular diagrams");
  degree_cmd->add_option("--Z", cfg.z, "index or tuple, e.g. 1,2");
  degree_cmd->add_option("--sing", cfg.sing, "number of singular chords");
  code_command("moves", "list applicable chord moves")->add_flag("!--no-insertions", cfg.insertions,
                                                                  "omit insertion moves");
  code_command("apply", "apply one move")->add_option("--move", cfg.move, "move as JSON")->required();
  code_command("canon", "canonical form under rotation and relabeling");
  app.add_subcommand("fuzz", "random move walks and degree checks")
      ->add_option("--seeds", cfg.seeds, "number of walks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return parse_error;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "fuzz") return detail::run_fuzz_command(cfg, out);
    std::vector<std::string> codes = cfg.codes;
    if (!cfg.file.empty()) {
      auto more = detail::read_code_file(cfg.file);
      codes.insert(codes.end(), more.begin(), more.end());
    }
    if (codes.empty()) {
      err << "no Gauss code given\n";
      return parse_error;
    }
    int status = ok;
    for (const auto& code : codes) status = std::max(status, detail::run_code(cfg, code, out));
    return status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_failure;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return invalid_diagram;
  }
}

}  // namespace vkp::cli
