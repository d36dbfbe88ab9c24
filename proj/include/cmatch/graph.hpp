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

// Coloured graphs, ground graphs (complete graphs and blow-ups), complements
// and induced subgraphs.
//
// Vertices are dense ids 0..n-1. Colours are 0-based internally and stored as
// bit masks, so an edge may carry several colours at once; an empty mask is a
// non-edge.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmatch/error.hpp"

namespace cmatch {

using Vertex = int;
// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;
// Always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

inline VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Simple undirected graph on 0..n-1 with an adjacency matrix and sorted
// adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n)
      : n_(n), adj_(static_cast<std::size_t>(n)),
        mat_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw StructuralError("negative vertex count");
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return mat_[index(u, v)] != 0; }
  const std::vector<Vertex>& neighbours(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }

  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (adjacent(u, v)) return;
    mat_[index(u, v)] = mat_[index(v, u)] = 1;
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++m_;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!adjacent(u, v)) return;
    mat_[index(u, v)] = mat_[index(v, u)] = 0;
    erase_sorted(adj_[static_cast<std::size_t>(u)], v);
    erase_sorted(adj_[static_cast<std::size_t>(v)], u);
    --m_;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbours(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.mat_ == b.mat_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw StructuralError("vertex id out of range");
    if (u == v) throw StructuralError("self-loops are not allowed");
  }
  static void insert_sorted(std::vector<Vertex>& xs, Vertex x) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), x), x);
  }
  static void erase_sorted(std::vector<Vertex>& xs, Vertex x) {
    xs.erase(std::lower_bound(xs.begin(), xs.end(), x));
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> mat_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Subgraph induced by `keep`, relabelled so that keep[i] becomes vertex i.
inline Graph induced(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order())
      throw StructuralError("induced: vertex out of range");
    pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbours(keep[i])) {
      int j = pos[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
    }
  return h;
}

inline Graph without_vertex(const Graph& g, Vertex v) {
  VertexSet keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced(g, keep);
}

// Components ordered by smallest member; each component sorted.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbours(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

// Side (0/1) per vertex from a BFS 2-colouring, or nullopt if g has an odd
// cycle.
inline std::optional<std::vector<int>> two_colouring(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbours(u)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          q.push(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

// ---------------------------------------------------------------------------
// Coloured graphs

using ColourMask = std::uint16_t;
inline constexpr int kMaxColours = 16;

inline constexpr ColourMask palette(int k) {
  return k >= kMaxColours ? ColourMask{0xFFFF}
                          : static_cast<ColourMask>((1u << k) - 1u);
}

inline constexpr ColourMask colour_bit(int c) {
  return static_cast<ColourMask>(1u << c);
}

// Lowest colour in a non-empty mask.
inline int min_colour(ColourMask m) {
  for (int c = 0; c < kMaxColours; ++c)
    if (m & colour_bit(c)) return c;
  return -1;
}

// Inclusive id range [lo, hi]; an empty part has hi == lo - 1.
struct PartRange {
  Vertex lo = 0;
  Vertex hi = -1;
  int size() const { return hi - lo + 1; }
  friend bool operator==(const PartRange&, const PartRange&) = default;
};

class ColouredGraph {
 public:
  ColouredGraph() = default;
  ColouredGraph(int n, int k)
      : n_(n), k_(k),
        masks_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw StructuralError("negative vertex count");
    if (k < 1 || k > kMaxColours)
      throw StructuralError("colour count must be in [1, 16]");
  }

  int order() const { return n_; }
  int colours() const { return k_; }

  ColourMask mask(Vertex u, Vertex v) const {
    check_pair(u, v);
    return masks_[index(u, v)];
  }
  bool present(Vertex u, Vertex v) const { return mask(u, v) != 0; }
  bool has_colour(Vertex u, Vertex v, int c) const {
    return (mask(u, v) & colour_bit(c)) != 0;
  }

  void set_mask(Vertex u, Vertex v, ColourMask m) {
    check_pair(u, v);
    if ((m & ~palette(k_)) != 0)
      throw StructuralError("colour outside the palette");
    masks_[index(u, v)] = masks_[index(v, u)] = m;
  }
  void add_colour(Vertex u, Vertex v, int c) {
    check_colour(c);
    set_mask(u, v, static_cast<ColourMask>(mask(u, v) | colour_bit(c)));
  }

  bool has_parts() const { return !parts_.empty(); }
  const std::vector<PartRange>& parts() const { return parts_; }
  // Part index of v; -1 when the graph carries no part layout.
  int part_of(Vertex v) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (v >= parts_[i].lo && v <= parts_[i].hi) return static_cast<int>(i);
    return -1;
  }

  // Parts must be contiguous ranges covering 0..n-1 in order.
  void set_parts(std::vector<PartRange> parts) {
    Vertex next = 0;
    for (const auto& p : parts) {
      if (p.lo != next || p.size() < 0)
        throw StructuralError("parts must be contiguous ranges in id order");
      next = p.hi + 1;
    }
    if (!parts.empty() && next != n_)
      throw StructuralError("parts must cover every vertex");
    parts_ = std::move(parts);
  }
  void clear_parts() { parts_.clear(); }

  void check_colour(int c) const {
    if (c < 0 || c >= k_) throw StructuralError("colour out of range");
  }

  Graph colour_subgraph(int c) const {
    check_colour(c);
    Graph g(n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (masks_[index(u, v)] & colour_bit(c)) g.add_edge(u, v);
    return g;
  }

  // Uncoloured graph of present edges.
  Graph support() const {
    Graph g(n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (masks_[index(u, v)] != 0) g.add_edge(u, v);
    return g;
  }

  int degree(Vertex u) const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (v != u && masks_[index(u, v)] != 0) ++d;
    return d;
  }

  int edge_count() const {
    int m = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (masks_[index(u, v)] != 0) ++m;
    return m;
  }

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw StructuralError("vertex id out of range");
    if (u == v) throw StructuralError("self-loops are not allowed");
  }

  int n_ = 0;
  int k_ = 1;
  std::vector<ColourMask> masks_;
  std::vector<PartRange> parts_;
};

// Colours every edge of `g` with colour c.
inline ColouredGraph monochromatic(const Graph& g, int k, int c) {
  ColouredGraph out(g.order(), k);
  for (auto [u, v] : g.edges()) out.add_colour(u, v, c);
  return out;
}

// ---------------------------------------------------------------------------
// Blow-ups and ground graphs

// A pattern graph F on parts 0..s-1 (loops allowed) with a vertex count per
// part. Part i is a clique in the blow-up iff F has a loop at i.
class BlowupSpec {
 public:
  BlowupSpec() = default;
  BlowupSpec(int s, const std::vector<Edge>& pattern_edges, std::vector<int> sizes)
      : s_(s), pattern_(static_cast<std::size_t>(s) * static_cast<std::size_t>(s), 0),
        sizes_(std::move(sizes)) {
    if (s < 0) throw StructuralError("negative part count");
    if (static_cast<int>(sizes_.size()) != s)
      throw StructuralError("blow-up needs one size per part");
    for (int sz : sizes_)
      if (sz < 0) throw StructuralError("part sizes must be non-negative");
    for (auto [i, j] : pattern_edges) {
      if (i < 0 || j < 0 || i >= s || j >= s)
        throw StructuralError("pattern edge references a missing part");
      pattern_[idx(i, j)] = pattern_[idx(j, i)] = 1;
    }
  }

  int parts() const { return s_; }
  bool linked(int i, int j) const { return pattern_[idx(i, j)] != 0; }
  bool loop(int i) const { return linked(i, i); }
  const std::vector<int>& sizes() const { return sizes_; }

  int order() const {
    int n = 0;
    for (int sz : sizes_) n += sz;
    return n;
  }

  // Pattern edges i <= j, loops included.
  std::vector<Edge> pattern_edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < s_; ++i)
      for (int j = i; j < s_; ++j)
        if (linked(i, j)) out.emplace_back(i, j);
    return out;
  }
  int pattern_edge_count() const {
    return static_cast<int>(pattern_edges().size());
  }

  std::vector<PartRange> layout() const {
    std::vector<PartRange> out;
    Vertex next = 0;
    for (int sz : sizes_) {
      out.push_back({next, next + sz - 1});
      next += sz;
    }
    return out;
  }

  BlowupSpec with_sizes(std::vector<int> sizes) const {
    BlowupSpec b = *this;
    if (static_cast<int>(sizes.size()) != s_)
      throw StructuralError("blow-up needs one size per part");
    for (int sz : sizes)
      if (sz < 0) throw StructuralError("part sizes must be non-negative");
    b.sizes_ = std::move(sizes);
    return b;
  }

  friend bool operator==(const BlowupSpec&, const BlowupSpec&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(s_) +
           static_cast<std::size_t>(j);
  }

  int s_ = 0;
  std::vector<char> pattern_;
  std::vector<int> sizes_;
};

// Host graph relative to which complements and degree deficits are taken:
// either the complete graph on the vertex set or a blow-up F(m_1, ..., m_s).
class Ground {
 public:
  static Ground complete() { return Ground{}; }
  static Ground blowup(BlowupSpec spec) {
    Ground g;
    g.spec_ = std::move(spec);
    return g;
  }

  bool is_complete() const { return !spec_.has_value(); }
  const BlowupSpec& spec() const {
    if (!spec_) throw StructuralError("complete ground has no blow-up spec");
    return *spec_;
  }

  // Ground graph on n vertices; a blow-up ground requires n to match its
  // spec.
  Graph graph(int n) const {
    if (!spec_) return complete_graph(n);
    if (spec_->order() != n)
      throw StructuralError("vertex count does not match the ground blow-up");
    Graph g(n);
    auto lay = spec_->layout();
    for (int i = 0; i < spec_->parts(); ++i)
      for (int j = i; j < spec_->parts(); ++j) {
        if (!spec_->linked(i, j)) continue;
        for (Vertex u = lay[static_cast<std::size_t>(i)].lo;
             u <= lay[static_cast<std::size_t>(i)].hi; ++u)
          for (Vertex v = (i == j ? u + 1 : lay[static_cast<std::size_t>(j)].lo);
               v <= lay[static_cast<std::size_t>(j)].hi; ++v)
            g.add_edge(u, v);
      }
    return g;
  }

 private:
  std::optional<BlowupSpec> spec_;
};

// F(m_1, ..., m_s) with every edge carrying the full palette of k colours.
inline ColouredGraph build_blowup(const BlowupSpec& spec, int k = 1) {
  ColouredGraph g(spec.order(), k);
  Graph h = Ground::blowup(spec).graph(spec.order());
  for (auto [u, v] : h.edges()) g.set_mask(u, v, palette(k));
  g.set_parts(spec.layout());
  return g;
}

// Throws unless g lives inside the ground graph: matching vertex count, the
// ground's part layout (when g records one), and only ground edges present.
inline Graph require_within(const ColouredGraph& g, const Ground& ground) {
  Graph host = ground.graph(g.order());
  if (!ground.is_complete() && g.has_parts() &&
      g.parts() != ground.spec().layout())
    throw StructuralError("graph part layout does not match the ground blow-up");
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.present(u, v) && !host.adjacent(u, v))
        throw StructuralError("edge outside the ground graph");
  return host;
}

struct GroundComplement {
  ColouredGraph base;
  Ground ground;
  // E(ground) \ E(base).
  Graph edges;
};

inline GroundComplement complement_within(const ColouredGraph& g,
                                          const Ground& ground) {
  Graph host = require_within(g, ground);
  Graph comp(g.order());
  for (auto [u, v] : host.edges())
    if (!g.present(u, v)) comp.add_edge(u, v);
  return {g, ground, std::move(comp)};
}

// Restriction to `keep`, relabelled in increasing id order. Part ranges are
// restricted accordingly (empty parts survive as empty ranges).
inline ColouredGraph induced_subgraph(const ColouredGraph& g, VertexSet keep) {
  keep = normalized(std::move(keep));
  for (Vertex v : keep)
    if (v < 0 || v >= g.order())
      throw StructuralError("induced_subgraph: vertex out of range");
  ColouredGraph h(static_cast<int>(keep.size()), g.colours());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      h.set_mask(static_cast<int>(i), static_cast<int>(j), g.mask(keep[i], keep[j]));
  if (g.has_parts()) {
    std::vector<PartRange> parts;
    Vertex next = 0;
    for (const auto& p : g.parts()) {
      int cnt = 0;
      for (Vertex v : keep)
        if (v >= p.lo && v <= p.hi) ++cnt;
      parts.push_back({next, next + cnt - 1});
      next += cnt;
    }
    h.set_parts(std::move(parts));
  }
  return h;
}

// max over u of d_ground(u) - d_g(u).
inline int min_ground_degree_deficit(const ColouredGraph& g, const Ground& ground) {
  Graph host = require_within(g, ground);
  int worst = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    worst = std::max(worst, host.degree(u) - g.degree(u));
  return worst;
}

}  // namespace cmatch
