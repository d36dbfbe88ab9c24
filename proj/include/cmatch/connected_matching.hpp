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

// Monochromatic components and the largest monochromatic connected
// (2-)matchings of a coloured graph.
//
// Colours 0..k0-1 count every component; colours k0..k-1 only count
// components whose colour subgraph is non-bipartite (these correspond to odd
// cycles).

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmatch/error.hpp"
#include "cmatch/graph.hpp"
#include "cmatch/matching.hpp"

namespace cmatch {

enum class CmMode { matching, two_matching };
enum class Restrict { all, nonbipartite };

inline const char* to_string(CmMode m) {
  return m == CmMode::matching ? "matching" : "two_matching";
}

// Connected components of the colour-c subgraph, singletons included.
inline std::vector<VertexSet> mono_components(const ColouredGraph& g, int colour) {
  return connected_components(g.colour_subgraph(colour));
}

struct ComponentStats {
  VertexSet vertices;
  int matching_number = 0;
  int two_matching_order = 0;
  bool bipartite = true;
};

struct ColourCm {
  std::vector<ComponentStats> components;
  // Vertex counts: twice the matching size, or the 2-matching order.
  int best_cm = 0;
  int best_cm2 = 0;
  int best_nonbip_cm = 0;
  int best_nonbip_cm2 = 0;
};

struct CMReport {
  int n = 0;
  std::vector<ColourCm> colours;

  int best(int colour, CmMode mode, Restrict restrict) const {
    const ColourCm& c = colours.at(static_cast<std::size_t>(colour));
    if (restrict == Restrict::all)
      return mode == CmMode::matching ? c.best_cm : c.best_cm2;
    return mode == CmMode::matching ? c.best_nonbip_cm : c.best_nonbip_cm2;
  }
  // The value that the k0 convention compares with colour c's threshold.
  int governed(int colour, CmMode mode, int k0) const {
    return best(colour, mode, colour < k0 ? Restrict::all : Restrict::nonbipartite);
  }
};

inline ComponentStats component_stats(const Graph& colour_graph, VertexSet vertices) {
  Graph sub = induced(colour_graph, vertices);
  ComponentStats st;
  st.vertices = std::move(vertices);
  st.matching_number = matching_number(sub);
  st.two_matching_order = two_matching_order(sub);
  st.bipartite = is_bipartite(sub);
  return st;
}

inline CMReport largest_mono_cm(const ColouredGraph& g) {
  CMReport rep;
  rep.n = g.order();
  for (int c = 0; c < g.colours(); ++c) {
    Graph h = g.colour_subgraph(c);
    ColourCm cc;
    for (auto& comp : connected_components(h)) {
      ComponentStats st = component_stats(h, std::move(comp));
      cc.best_cm = std::max(cc.best_cm, 2 * st.matching_number);
      cc.best_cm2 = std::max(cc.best_cm2, st.two_matching_order);
      if (!st.bipartite) {
        cc.best_nonbip_cm = std::max(cc.best_nonbip_cm, 2 * st.matching_number);
        cc.best_nonbip_cm2 = std::max(cc.best_nonbip_cm2, st.two_matching_order);
      }
      cc.components.push_back(std::move(st));
    }
    rep.colours.push_back(std::move(cc));
  }
  return rep;
}

struct CMWitness {
  int colour = 0;
  VertexSet component;
  int vertices = 0;  // covered vertex count
  Matching matching;        // set in matching mode
  TwoMatching two_matching;  // set in 2-matching mode
};

// A colour c and a component carrying a connected (2-)matching on at least
// thresholds[c] vertices, non-bipartite when c >= k0; nullopt if none.
inline std::optional<CMWitness> has_cm_at_least(const ColouredGraph& g,
                                                std::span<const int> thresholds, int k0,
                                                CmMode mode) {
  if (static_cast<int>(thresholds.size()) != g.colours())
    throw PreconditionError("has_cm_at_least: one threshold per colour required");
  for (int t : thresholds)
    if (t <= 0) throw PreconditionError("has_cm_at_least: thresholds must be positive");
  if (k0 < 0 || k0 > g.colours()) throw PreconditionError("has_cm_at_least: k0 out of range");
  for (int c = 0; c < g.colours(); ++c) {
    Graph h = g.colour_subgraph(c);
    for (auto& comp : connected_components(h)) {
      if (static_cast<int>(comp.size()) < thresholds[static_cast<std::size_t>(c)]) continue;
      Graph sub = induced(h, comp);
      if (c >= k0 && is_bipartite(sub)) continue;
      CMWitness w;
      if (mode == CmMode::matching) {
        Matching local = max_matching(sub);
        w.vertices = 2 * local.size();
        for (auto [a, b] : local.edges)
          w.matching.edges.push_back(make_edge(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)]));
      } else {
        TwoMatching local = max_two_matching(sub);
        w.vertices = local.order;
        for (auto [a, b] : local.edges)
          w.two_matching.edges.push_back(make_edge(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)]));
        for (const auto& cyc : local.odd_cycles) {
          std::vector<Vertex> mapped;
          for (Vertex v : cyc) mapped.push_back(comp[static_cast<std::size_t>(v)]);
          w.two_matching.odd_cycles.push_back(std::move(mapped));
        }
        w.two_matching.order = local.order;
      }
      if (w.vertices < thresholds[static_cast<std::size_t>(c)]) continue;
      w.colour = c;
      w.component = std::move(comp);
      return w;
    }
  }
  return std::nullopt;
}

inline std::string describe(const CMWitness& w, CmMode mode) {
  std::string s = "colour " + std::to_string(w.colour + 1) + " has a connected " +
                  (mode == CmMode::matching ? "matching" : "2-matching") + " on " +
                  std::to_string(w.vertices) + " vertices in component {";
  for (std::size_t i = 0; i < w.component.size(); ++i)
    s += (i ? "," : "") + std::to_string(w.component[i]);
  return s + "}";
}

}  // namespace cmatch
