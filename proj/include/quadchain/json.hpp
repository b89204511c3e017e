#pragma once

// JSON schemas shared by the CLI. Integers travel as decimal strings so that
// arbitrary precision survives any JSON parser.

#include <json.hpp>

#include <string>
#include <vector>

#include "quadchain/chain.hpp"
#include "quadchain/residues.hpp"
#include "quadchain/search.hpp"
#include "quadchain/triples.hpp"

namespace quadchain::json {

using nlohmann::json;

inline json to_json(SystemLabel s) { return json::array({s.lambda_a, s.lambda_b}); }

inline SystemLabel system_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(ErrorKind::Parse, "system must be a two-element integer array");
  }
  return SystemLabel(j[0].get<int>(), j[1].get<int>());
}

inline json to_json(const Int& n) { return to_decimal(n); }

inline Int int_from_json(const json& j) {
  if (!j.is_string()) throw Error(ErrorKind::Parse, "integers must be decimal strings");
  return parse_int(j.get<std::string>());
}

/// {"first_system": [a, b], "terms": ["...", ...]}
inline json to_json(const ChainWindow& w) {
  json terms = json::array();
  for (const auto& t : w.terms()) terms.push_back(to_decimal(t));
  return {{"first_system", to_json(w.first_system())}, {"terms", std::move(terms)}};
}

/// Parses the chain schema without validating the chain itself.
inline ChainWindow chain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("first_system") || !j.contains("terms") ||
      !j["terms"].is_array()) {
    throw Error(ErrorKind::Parse, "chain object needs \"first_system\" and \"terms\"");
  }
  std::vector<Int> terms;
  for (const auto& t : j["terms"]) terms.push_back(int_from_json(t));
  if (terms.size() < 2) throw Error(ErrorKind::Parse, "a chain needs at least two terms");
  return {std::move(terms), system_from_json(j["first_system"])};
}

inline json to_json(const Triple& t) {
  return {{"left", to_json(t.left)},
          {"center", to_json(t.center)},
          {"right", to_json(t.right)},
          {"system", to_json(t.system)}};
}

inline json to_json(const SiblingReport& r) {
  return {{"base", to_json(r.base)},
          {"sibling_value", to_json(r.sibling_value)},
          {"sibling", to_json(r.sibling)},
          {"via_corollary8", r.via_corollary8}};
}

inline json to_json(const ThirdChainCertificate& c) {
  json j = {{"u", to_json(c.u)},
            {"v", to_json(c.v)},
            {"t", to_json(c.t)},
            {"w", to_json(c.w)},
            {"system", to_json(c.system)},
            {"first", to_json(c.first)},
            {"second", to_json(c.second)},
            {"third", to_json(c.third)},
            {"hypothesis_prime", c.hypothesis_prime},
            {"hypothesis_nondiv", c.hypothesis_nondiv},
            {"third_verified", c.third_verified}};
  j["congruence_holds"] = c.congruence_holds ? json(*c.congruence_holds) : json(nullptr);
  return j;
}

/// {"m": int, "roots_p1": [ints], "roots_p2": [ints], "forbidden": bool}
inline json to_json(const ModulusReport& r) {
  return {{"m", r.m}, {"roots_p1", r.roots_p1}, {"roots_p2", r.roots_p2}, {"forbidden", r.forbidden}};
}

/// {"box": N, "system": [a, b], "pairs": [["x", "y"], ...]} for one system.
inline json to_json(const SearchResult& r, SystemLabel s) {
  json pairs = json::array();
  for (const auto& p : r.pairs_for(s)) pairs.push_back(json::array({to_decimal(p.x), to_decimal(p.y)}));
  return {{"box", r.box}, {"system", to_json(s)}, {"pairs", std::move(pairs)}};
}

inline json to_json(const SpecialChain& c) {
  return {{"seed", json::array({to_decimal(c.seed.x), to_decimal(c.seed.y)})},
          {"seed_system", to_json(c.seed.system)},
          {"chain", to_json(c.window)}};
}

inline json to_json(const PalindromicPoint& p) {
  json systems = json::array();
  for (SystemLabel s : p.admitting_systems) systems.push_back(to_json(s));
  json j = {{"x", to_json(p.x)},
            {"y", to_json(p.y)},
            {"curve", p.curve},
            {"admitting_systems", std::move(systems)},
            {"generates_chain", p.generates_chain}};
  j["chain"] = p.chain ? to_json(*p.chain) : json(nullptr);
  return j;
}

}  // namespace quadchain::json
