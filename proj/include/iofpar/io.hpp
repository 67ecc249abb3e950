#pragma once

// JSON encodings; requires the single-header nlohmann/json (json.hpp) on
// the include path.

#include <json.hpp>

#include "transformation.hpp"
#include "verifier.hpp"

namespace iofpar {

inline nlohmann::ordered_json to_json(const PartialInjection& f) {
  nlohmann::ordered_json map = nlohmann::ordered_json::array();
  for (auto [a, b] : f.pairs())
    map.push_back({a, b});
  return {{"n", f.n()}, {"map", map}};
}

inline PartialInjection partial_injection_from_json(const nlohmann::ordered_json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("map")) {
      if (!p.is_array() || p.size() != 2)
        throw StructureError("map entries must be [point, image] pairs");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return PartialInjection::from_pairs(n, pairs);
  } catch (const nlohmann::json::exception& e) {
    throw StructureError(std::string("bad transformation JSON: ") + e.what());
  }
}

inline nlohmann::ordered_json to_json(const NormalFormWord& nf) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& b : nf.blocks)
    blocks.push_back({{"kind", std::string(1, static_cast<char>(b.kind))}, {"i", b.i}, {"j", b.j}});
  return {{"A", nf.A}, {"blocks", blocks}, {"word", to_string(render(nf))}};
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json errata = nlohmann::ordered_json::array();
  for (const auto& e : r.errata)
    errata.push_back({{"family", e.instance.family},
                      {"params", e.instance.params},
                      {"lhs", to_string(e.instance.lhs)},
                      {"rhs", to_string(e.instance.rhs)},
                      {"lhs_eval", to_json(e.check.lhs_eval)},
                      {"rhs_eval", to_json(e.check.rhs_eval)}});
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : r.word_failures)
    failures.push_back({{"word", to_string(f.word)}, {"reason", f.reason}});
  nlohmann::ordered_json elapsed = nlohmann::ordered_json::object();
  for (const auto& [name, ms] : r.elapsed_ms)
    elapsed[name] = ms;
  return {{"n", r.n},
          {"seed", r.seed},
          {"relations_checked", r.relations_checked},
          {"relations_failed", r.relations_failed},
          {"errata", errata},
          {"words_sampled", r.words_sampled},
          {"words_normalized", r.words_normalized},
          {"word_failures", failures},
          {"monoid_size", r.monoid_size},
          {"closure_size", r.closure_size},
          {"wn_size", r.wn_size},
          {"bijection_ok", r.bijection_ok},
          {"generation_ok", r.generation_ok},
          {"presentation_verified", r.presentation_verified()},
          {"elapsed_ms", elapsed}};
}

} // namespace iofpar
