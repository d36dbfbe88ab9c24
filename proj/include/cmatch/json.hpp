// Copyright 2026 The cmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "cmatch/connected_matching.hpp"
#include "cmatch/error.hpp"
#include "cmatch/gallai_edmonds.hpp"
#include "cmatch/io.hpp"
#include "cmatch/matching.hpp"
#include "cmatch/reduction.hpp"
#include "cmatch/verification.hpp"

namespace cmatch {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline Rational rational_from_json(const Json& j, const char* field) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw PreconditionError(std::string("params: field '") + field + "' must be a rational");
}

inline Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

inline Json sets_json(const std::vector<VertexSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(s);
  return a;
}

inline CmMode mode_from_string(const std::string& s) {
  if (s == "m" || s == "matching") return CmMode::matching;
  if (s == "2m" || s == "two_matching" || s == "two-matching") return CmMode::two_matching;
  throw PreconditionError("unknown mode '" + s + "' (expected m or 2m)");
}

// {k, k0, s, alphas | alpha, beta, eps, n, N | Ns, mode, delta}; k0
// defaults to k, s to the number of target sizes.
inline ReductionParams params_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("params: expected a JSON object");
  auto need = [&](const char* key) -> const Json& {
    if (!j.contains(key)) throw PreconditionError(std::string("params: missing field '") + key + "'");
    return j.at(key);
  };
  auto integer = [&](const char* key) {
    const Json& v = need(key);
    if (!v.is_number_integer()) throw PreconditionError(std::string("params: '") + key + "' must be an integer");
    return v.get<int>();
  };
  ReductionParams p;
  p.k = integer("k");
  p.k0 = j.contains("k0") ? integer("k0") : p.k;
  if (j.contains("alphas")) {
    const Json& a = j.at("alphas");
    if (!a.is_array()) throw PreconditionError("params: 'alphas' must be an array");
    for (const auto& x : a) p.alphas.push_back(rational_from_json(x, "alphas"));
  } else {
    p.alphas.assign(static_cast<std::size_t>(std::max(p.k, 0)), rational_from_json(need("alpha"), "alpha"));
  }
  p.beta = rational_from_json(need("beta"), "beta");
  p.eps = rational_from_json(need("eps"), "eps");
  p.n = integer("n");
  if (j.contains("Ns")) {
    for (const auto& x : j.at("Ns")) {
      if (!x.is_number_integer()) throw PreconditionError("params: 'Ns' must hold integers");
      p.targets.push_back(x.get<int>());
    }
  } else {
    p.targets = {integer("N")};
  }
  p.s = j.contains("s") ? integer("s") : static_cast<int>(p.targets.size());
  if (j.contains("mode")) p.mode = mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("delta")) p.delta_override = rational_from_json(j.at("delta"), "delta");
  p.validate();
  return p;
}

inline Json params_json(const ReductionParams& p) {
  Json a = Json::array();
  for (const auto& x : p.alphas) a.push_back(rational_json(x));
  Json j{{"k", p.k},           {"k0", p.k0},
         {"s", p.s},           {"alphas", a},
         {"beta", rational_json(p.beta)}, {"eps", rational_json(p.eps)},
         {"n", p.n},           {"Ns", p.targets},
         {"mode", p.mode == CmMode::matching ? "m" : "2m"}};
  if (p.delta_override) j["delta"] = rational_json(*p.delta_override);
  return j;
}

// {parts, edges: [[i, j], ...] (loops as [i, i]), sizes}.
inline BlowupSpec spec_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return BlowupSpec(j.at("parts").get<int>(), edges, j.at("sizes").get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("ground spec: ") + e.what());
  }
}

inline Json spec_json(const BlowupSpec& s) {
  return {{"parts", s.parts()}, {"edges", edges_json(s.pattern_edges())}, {"sizes", s.sizes()}};
}

inline Json matching_json(const Matching& m) {
  return {{"size", m.size()}, {"edges", edges_json(m.edges)}};
}

inline Json two_matching_json(const TwoMatching& m) {
  Json cycles = Json::array();
  for (const auto& c : m.odd_cycles) cycles.push_back(c);
  return {{"order", m.order}, {"edges", edges_json(m.edges)}, {"odd_cycles", cycles}};
}

inline Json ge_json(const GEDecomposition& ge) {
  return {{"A", ge.A}, {"C", ge.C}, {"D", ge.D}, {"d_components", sets_json(ge.d_components)}};
}

inline Json cm_report_json(const CMReport& r, CmMode mode, int k0, std::span<const int> thresholds) {
  Json colours = Json::array();
  for (std::size_t c = 0; c < r.colours.size(); ++c) {
    const ColourCm& cc = r.colours[c];
    Json comps = Json::array();
    for (const auto& st : cc.components)
      comps.push_back({{"vertices", st.vertices},
                       {"matching_number", st.matching_number},
                       {"two_matching_order", st.two_matching_order},
                       {"bipartite", st.bipartite}});
    const int governed = r.governed(static_cast<int>(c), mode, k0);
    Json cj{{"colour", c + 1},
            {"best_cm", cc.best_cm},
            {"best_cm2", cc.best_cm2},
            {"best_nonbipartite_cm", cc.best_nonbip_cm},
            {"best_nonbipartite_cm2", cc.best_nonbip_cm2},
            {"governed", governed},
            {"components", comps}};
    if (!thresholds.empty()) {
      cj["threshold"] = thresholds[c];
      cj["meets_threshold"] = governed >= thresholds[c];
    }
    colours.push_back(std::move(cj));
  }
  return {{"n", r.n}, {"mode", mode == CmMode::matching ? "m" : "2m"}, {"k0", k0}, {"colours", colours}};
}

inline Json structure_json(const Structure& s) {
  Json colours = Json::array();
  for (std::size_t c = 0; c < s.colours.size(); ++c) {
    Json comps = Json::array();
    for (const auto& comp : s.colours[c].components) {
      Json cj{{"vertices", comp.vertices},
              {"template", comp.kind == Template::star ? "star" : "bipartite"}};
      if (comp.kind == Template::star) {
        cj["head"] = comp.head;
        cj["leaves"] = sets_json(comp.leaves);
      } else {
        cj["left"] = comp.left;
        cj["right"] = comp.right;
      }
      comps.push_back(std::move(cj));
    }
    colours.push_back({{"colour", c + 1}, {"components", comps}});
  }
  return colours;
}

inline Json reduction_json(const ReductionReport& r) {
  Json checks = Json::object();
  for (const auto& [k, v] : r.property_checks) checks[k] = v;
  Json audit = Json::array();
  for (const auto& a : r.audit) audit.push_back({{"stage", a.stage}, {"governed", a.governed}});
  Json census = Json::object();
  for (const auto& [t, vs] : type_census(r.structure)) census[to_string(t)] = vs;
  return {{"ground", to_string(r.kind)},
          {"params", params_json(r.params)},
          {"delta", rational_json(r.delta)},
          {"delta_n", r.delta_n},
          {"thresholds", r.thresholds},
          {"edges_added", r.edges_added},
          {"colours_added", r.colours_added},
          {"maximalize_passes", r.maximalize_passes},
          {"structure", structure_json(r.structure)},
          {"types", census},
          {"complement_edges", r.complement.size()},
          {"complement_matching", matching_json(r.complement_matching)},
          {"complement_matching_bound", r.complement_bound},
          {"survivors", r.survivors},
          {"kept", r.kept},
          {"audit", audit},
          {"property_checks", checks},
          {"passed", r.passed()},
          {"g1", to_graph_string(r.g1)},
          {"output_graph", to_graph_string(r.g_prime)}};
}

inline Json verify_json(const VerifyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json fj{{"index", f.index}, {"what", f.what}};
    if (!f.graph.empty()) fj["graph"] = f.graph;
    failures.push_back(std::move(fj));
  }
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  Json j{{"lemma", r.lemma}, {"mode", r.mode}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["space_size"] = big_json(r.space_size);
  j["checked"] = r.checked;
  j["counts"] = counts;
  j["failure_count"] = r.failure_count;
  j["failures"] = failures;
  j["passed"] = r.passed();
  return j;
}

inline Json stability_json(const StabilityReport& r) {
  Json defects = Json::array();
  for (const auto& d : r.defects)
    defects.push_back({{"block", d.block}, {"wrong", d.wrong}, {"total", d.total},
                       {"fraction", rational_json(d.fraction())}});
  Json j{{"lemma", "stability"},
         {"m", r.m},
         {"eps", rational_json(r.eps)},
         {"slack", rational_json(r.slack)},
         {"fourth_block", to_string(r.fourth)},
         {"search", r.search}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["candidates"] = r.candidates;
  j["partition"] = {{"X", r.best.X}, {"Y", r.best.Y}, {"Z", r.best.Z}, {"W", r.best.W},
                    {"red", r.best.red + 1}, {"blue", r.best.blue + 1}, {"green", r.best.green + 1}};
  j["defects"] = defects;
  j["total_wrong"] = r.total_wrong;
  j["within_slack"] = r.within_slack;
  return j;
}

inline Json claim41_json(const Claim41Report& r) {
  return {{"lemma", "claim41"},
          {"complement_matching", r.complement_matching},
          {"bound", r.bound},
          {"within_bound", r.within_bound},
          {"types", r.types},
          {"tau", r.tau},
          {"sigma", r.sigma},
          {"chain", r.chain},
          {"steps", r.steps},
          {"max_deficit", r.max_deficit},
          {"quarter_steps", r.quarter_steps},
          {"final_sets_edge_free", r.final_sets_edge_free},
          {"final_within_deficit", r.final_within_deficit},
          {"passed", r.passed()}};
}

}  // namespace cmatch
