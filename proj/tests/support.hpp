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

#include <span>
#include <vector>

#include "cmatch/connected_matching.hpp"
#include "cmatch/graph.hpp"
#include "cmatch/random.hpp"

namespace cmatch::testing {

inline Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

// Centre 0, leaves 1..k.
inline Graph star(int k) {
  Graph g(k + 1);
  for (Vertex v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

inline Graph from_edges(int n, std::vector<Edge> edges) { return Graph(n, edges); }

// Three-colouring of K5 with X={0}, Y={1}, Z={2}, W={3,4}; colours 0, 1, 2
// play red, blue, green.
inline ColouredGraph structure_c_k5() {
  ColouredGraph g(5, 3);
  g.add_colour(0, 2, 0);
  g.add_colour(1, 3, 0);
  g.add_colour(1, 4, 0);
  g.add_colour(0, 3, 1);
  g.add_colour(0, 4, 1);
  g.add_colour(1, 2, 1);
  g.add_colour(2, 3, 2);
  g.add_colour(2, 4, 2);
  g.add_colour(0, 1, 2);
  g.add_colour(3, 4, 2);
  return g;
}

// Brute-force maximality: every missing (ground pair, colour) creates a
// forbidden structure when added on its own.
inline bool every_addition_forbidden(const ColouredGraph& g, const Graph& host,
                                     std::span<const int> thresholds, int k0, CmMode mode) {
  for (auto [u, v] : host.edges())
    for (int c = 0; c < g.colours(); ++c) {
      if (g.has_colour(u, v, c)) continue;
      ColouredGraph h = g;
      h.add_colour(u, v, c);
      if (!has_cm_at_least(h, thresholds, k0, mode)) return false;
    }
  return true;
}

// Greedy random colouring of the host: each pair is kept with probability p
// in a uniform colour unless that creates a forbidden structure.
inline ColouredGraph random_colouring_avoiding(const Graph& host, int k, std::span<const int> t, int k0,
                                               CmMode mode, double p, Rng& rng) {
  ColouredGraph g(host.order(), k);
  for (auto [u, v] : host.edges()) {
    if (!rng.bernoulli(p)) continue;
    int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    g.add_colour(u, v, c);
    if (has_cm_at_least(g, t, k0, mode)) g.set_mask(u, v, 0);
  }
  return g;
}

}  // namespace cmatch::testing
