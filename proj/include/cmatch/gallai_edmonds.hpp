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

// Gallai-Edmonds decomposition and its structural consequences: maximal
// graphs without a matching (or 2-matching) of a given size are complete
// blow-ups of stars, and a connected graph with few matched vertices has a
// vertex whose removal lowers the matching number.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cmatch/error.hpp"
#include "cmatch/graph.hpp"
#include "cmatch/matching.hpp"
#include "cmatch/oracle.hpp"

namespace cmatch {

// D: vertices missed by some maximum matching. A: vertices outside D with a
// neighbour in D. C: the rest.
struct GEDecomposition {
  VertexSet A;
  VertexSet C;
  VertexSet D;
  std::vector<VertexSet> d_components;  // components of G[D], by smallest id
};

// D is found as {v : nu(g - v) = nu(g)}, one matching per vertex.
inline GEDecomposition ge_decompose(const Graph& g) {
  const int n = g.order();
  const int nu = matching_number(g);
  GEDecomposition ge;
  std::vector<char> in_d(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    if (matching_number(without_vertex(g, v)) == nu) {
      in_d[static_cast<std::size_t>(v)] = 1;
      ge.D.push_back(v);
    }
  for (Vertex v = 0; v < n; ++v) {
    if (in_d[static_cast<std::size_t>(v)]) continue;
    bool touches_d = false;
    for (Vertex w : g.neighbours(v)) touches_d |= in_d[static_cast<std::size_t>(w)] != 0;
    (touches_d ? ge.A : ge.C).push_back(v);
  }
  for (const auto& comp : connected_components(induced(g, ge.D))) {
    VertexSet orig;
    for (Vertex local : comp) orig.push_back(ge.D[static_cast<std::size_t>(local)]);
    ge.d_components.push_back(std::move(orig));
  }
  return ge;
}

// Complete blow-up of a star: every pair touching `head` is an edge, as is
// every pair inside one leaf blob. An empty head with a single leaf is a
// plain clique.
struct StarBlowup {
  VertexSet head;
  std::vector<VertexSet> leaves;
  friend bool operator==(const StarBlowup&, const StarBlowup&) = default;
};

inline Graph star_graph(int n, const StarBlowup& star) {
  Graph h(n);
  std::vector<char> is_head(static_cast<std::size_t>(n), 0);
  for (Vertex a : star.head) is_head[static_cast<std::size_t>(a)] = 1;
  for (Vertex a : star.head)
    for (Vertex v = 0; v < n; ++v)
      if (v != a) h.add_edge(a, v);
  for (const auto& blob : star.leaves)
    for (std::size_t i = 0; i < blob.size(); ++i)
      for (std::size_t j = i + 1; j < blob.size(); ++j) h.add_edge(blob[i], blob[j]);
  return h;
}

// Blobs partition 0..n-1.
inline bool star_partitions(int n, const StarBlowup& star) {
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  auto mark = [&](const VertexSet& s) {
    for (Vertex v : s) {
      if (v < 0 || v >= n) return false;
      ++hits[static_cast<std::size_t>(v)];
    }
    return true;
  };
  if (!mark(star.head)) return false;
  for (const auto& blob : star.leaves)
    if (blob.empty() || !mark(blob)) return false;
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

inline bool is_subgraph(const Graph& small, const Graph& big) {
  if (small.order() != big.order()) return false;
  for (auto [u, v] : small.edges())
    if (!big.adjacent(u, v)) return false;
  return true;
}

// The star read off a GE decomposition: head A, blobs C, D_1, ..., D_r.
inline StarBlowup ge_star(const GEDecomposition& ge) {
  StarBlowup star;
  star.head = ge.A;
  if (!ge.C.empty()) star.leaves.push_back(ge.C);
  for (const auto& d : ge.d_components) star.leaves.push_back(d);
  return star;
}

// The 2-matching analogue: with D' the vertices of D isolated in G[D],
// head A' = N(D'), one clique blob C' = V \ (A' u D'), and singleton leaves
// for D'.
inline StarBlowup two_matching_star(const Graph& g) {
  GEDecomposition ge = ge_decompose(g);
  const int n = g.order();
  std::vector<char> in_d(static_cast<std::size_t>(n), 0), isolated(static_cast<std::size_t>(n), 0),
      in_a(static_cast<std::size_t>(n), 0);
  for (Vertex v : ge.D) in_d[static_cast<std::size_t>(v)] = 1;
  VertexSet d_prime;
  for (Vertex v : ge.D) {
    bool alone = true;
    for (Vertex w : g.neighbours(v)) alone &= !in_d[static_cast<std::size_t>(w)];
    if (alone) {
      isolated[static_cast<std::size_t>(v)] = 1;
      d_prime.push_back(v);
    }
  }
  for (Vertex v : d_prime)
    for (Vertex w : g.neighbours(v)) in_a[static_cast<std::size_t>(w)] = 1;
  StarBlowup star;
  VertexSet c_prime;
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[static_cast<std::size_t>(v)])
      star.head.push_back(v);
    else if (!isolated[static_cast<std::size_t>(v)])
      c_prime.push_back(v);
  }
  if (!c_prime.empty()) star.leaves.push_back(c_prime);
  for (Vertex v : d_prime) star.leaves.push_back({v});
  return star;
}

namespace detail {

// Adds every missing pair (in lexicographic order) whose addition keeps
// `invariant` unchanged. One pass suffices: once a pair raises the invariant
// it raises it in every supergraph.
inline Graph saturate(Graph h, const std::function<int(const Graph&)>& invariant) {
  const int target = invariant(h);
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = u + 1; v < h.order(); ++v) {
      if (h.adjacent(u, v)) continue;
      h.add_edge(u, v);
      if (invariant(h) != target) h.remove_edge(u, v);
    }
  return h;
}

inline StarBlowup extend_to_star(const Graph& g,
                                 const std::function<int(const Graph&)>& invariant,
                                 const std::function<StarBlowup(const Graph&)>& structure,
                                 const char* who) {
  const int n = g.order();
  const int value = invariant(g);
  // The proof's H already contains g with the same invariant.
  Graph h = star_graph(n, structure(g));
  if (!is_subgraph(g, h) || invariant(h) != value)
    throw InternalError(std::string(who) + ": star from the decomposition loses the invariant");
  h = saturate(std::move(h), invariant);
  StarBlowup star = structure(h);
  if (!star_partitions(n, star) || !(star_graph(n, star) == h))
    throw InternalError(std::string(who) + ": saturated graph is not its own star blow-up");
  return star;
}

}  // namespace detail

// An edge-maximal supergraph H of g with nu(H) = nu(g), returned as its star
// structure. Requires nu(g) < m.
inline StarBlowup maximal_star_extension(const Graph& g, int m) {
  if (matching_number(g) >= m)
    throw PreconditionError("maximal_star_extension: graph has a matching of size m");
  return detail::extend_to_star(
      g, [](const Graph& h) { return matching_number(h); },
      [](const Graph& h) { return ge_star(ge_decompose(h)); }, "maximal_star_extension");
}

// As above for the maximum 2-matching order; requires order(g) < m. The
// result has at most one non-singleton leaf.
inline StarBlowup maximal_two_matching_extension(const Graph& g, int m) {
  if (two_matching_order(g) >= m)
    throw PreconditionError(
        "maximal_two_matching_extension: graph has a 2-matching on m vertices");
  return detail::extend_to_star(
      g, [](const Graph& h) { return two_matching_order(h); }, two_matching_star,
      "maximal_two_matching_extension");
}

// A vertex whose deletion lowers the matching number: the smallest vertex
// covered by every maximum matching.
inline Vertex critical_vertex(const Graph& g, int m) {
  if (!is_connected(g)) throw PreconditionError("critical_vertex: graph is disconnected");
  if (g.order() < 2 * m + 2) throw PreconditionError("critical_vertex: need n >= 2m + 2");
  if (matching_number(g) > m)
    throw PreconditionError("critical_vertex: graph has a matching of size m + 1");
  GEDecomposition ge = ge_decompose(g);
  VertexSet b = normalized([&] {
    VertexSet s = ge.A;
    s.insert(s.end(), ge.C.begin(), ge.C.end());
    return s;
  }());
  // Unreachable under the preconditions: B empty means g is factor-critical.
  if (b.empty()) throw PreconditionError("critical_vertex: graph is factor-critical");
  return b.front();
}

struct GETheoremReport {
  bool m1 = true;  // every maximum matching covers C and matches A into distinct D-components
  bool m2 = true;  // every D-component is factor-critical
  long matchings_checked = 0;
  std::optional<Matching> counterexample;
  std::vector<VertexSet> non_factor_critical;
  bool passed() const { return m1 && m2; }
};

inline constexpr int kMaxGETheoremOrder = 12;

inline GETheoremReport verify_ge_theorem(const Graph& g) {
  if (g.order() > kMaxGETheoremOrder)
    throw PreconditionError("verify_ge_theorem: graph too large");
  const int n = g.order();
  GEDecomposition ge = ge_decompose(g);
  std::vector<int> d_comp(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < ge.d_components.size(); ++i)
    for (Vertex v : ge.d_components[i]) d_comp[static_cast<std::size_t>(v)] = static_cast<int>(i);

  GETheoremReport rep;
  oracle::for_each_maximum_matching(g, [&](const Matching& m) {
    ++rep.matchings_checked;
    std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
    for (auto [u, v] : m.edges) {
      mate[static_cast<std::size_t>(u)] = v;
      mate[static_cast<std::size_t>(v)] = u;
    }
    bool ok = true;
    for (Vertex c : ge.C) ok &= mate[static_cast<std::size_t>(c)] != -1;
    std::vector<char> used(ge.d_components.size(), 0);
    for (Vertex a : ge.A) {
      Vertex w = mate[static_cast<std::size_t>(a)];
      if (w == -1 || d_comp[static_cast<std::size_t>(w)] == -1) {
        ok = false;
        continue;
      }
      auto& u = used[static_cast<std::size_t>(d_comp[static_cast<std::size_t>(w)])];
      if (u) ok = false;
      u = 1;
    }
    if (!ok && rep.m1) {
      rep.m1 = false;
      Matching sorted = m;
      for (auto& e : sorted.edges) e = make_edge(e.first, e.second);
      std::sort(sorted.edges.begin(), sorted.edges.end());
      rep.counterexample = sorted;
    }
  });
  for (const auto& comp : ge.d_components)
    if (!is_factor_critical(induced(g, comp))) {
      rep.m2 = false;
      rep.non_factor_critical.push_back(comp);
    }
  return rep;
}

}  // namespace cmatch
