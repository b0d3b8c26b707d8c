#pragma once

#include <string>

#include <json.hpp>

#include "vkparity/errors.hpp"
#include "vkparity/formal_sum.hpp"
#include "vkparity/invariants.hpp"
#include "vkparity/moves.hpp"
#include "vkparity/parity.hpp"

namespace vkp {

using nlohmann::json;

inline json parity_to_json(const ParityMap& m) {
  json out = json::object();
  for (const auto& [label, p] : m) out[std::to_string(label)] = p;
  return out;
}

inline ParityMap parity_from_json(const json& j) {
  ParityMap out;
  for (const auto& [key, value] : j.items()) out[std::stoi(key)] = value.get<int>();
  return out;
}

inline json profile_to_json(const InvariantProfile& p) {
  json a = json::object();
  json v = json::object();
  json vz = json::object();
  for (const auto& [i, value] : p.a_signed) a[std::to_string(i)] = value;
  for (const auto& [i, value] : p.v_signed) v[std::to_string(i)] = value;
  for (const auto& [t, value] : p.v_tuple) vz[to_string(t)] = value;
  return {{"A", a}, {"V", v}, {"VZ", vz}};
}

inline TupleSpec parse_tuple(const std::string& text) {
  TupleSpec t;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      t.z.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::logic_error&) {
      throw BadTuple("malformed index tuple '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return t;
}

inline InvariantProfile profile_from_json(const json& j) {
  InvariantProfile p;
  for (const auto& [key, value] : j.at("A").items()) p.a_signed[std::stoi(key)] = value.get<std::int64_t>();
  for (const auto& [key, value] : j.at("V").items()) p.v_signed[std::stoi(key)] = value.get<std::int64_t>();
  for (const auto& [key, value] : j.at("VZ").items()) p.v_tuple[parse_tuple(key)] = value.get<std::int64_t>();
  p.max_index = p.v_signed.empty() ? 0 : p.v_signed.rbegin()->first;
  p.max_order = 0;
  for (const auto& [t, value] : p.v_tuple) p.max_order = std::max(p.max_order, static_cast<int>(t.z.size()));
  return p;
}

inline json sum_to_json(const FormalSum& s) {
  json out = json::array();
  for (const auto& [code, coeff] : s.terms()) out.push_back({{"coeff", coeff}, {"flat", code}});
  return out;
}

inline FormalSum sum_from_json(const json& j) {
  FormalSum out;
  for (const auto& term : j) out.add(term.at("flat").get<std::string>(), term.at("coeff").get<std::int64_t>());
  return out;
}

inline json move_to_json(const MoveInstance& m) {
  return {{"kind", to_string(m.kind)},
          {"site", m.site},
          {"variant", m.variant},
          {"params",
           {{"sign", m.params.sign},
            {"head_first", m.params.head_first},
            {"nested", m.params.nested},
            {"under_first", m.params.under_first}}}};
}

inline MoveInstance move_from_json(const json& j) {
  MoveInstance m;
  const auto kind = move_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw ParseError("unknown move kind " + j.at("kind").dump());
  m.kind = *kind;
  m.site = j.at("site").get<std::vector<int>>();
  m.variant = j.value("variant", std::string{});
  if (j.contains("params")) {
    const auto& p = j.at("params");
    m.params.sign = p.value("sign", 1);
    m.params.head_first = p.value("head_first", true);
    m.params.nested = p.value("nested", false);
    m.params.under_first = p.value("under_first", false);
  }
  return m;
}

}  // namespace vkp
