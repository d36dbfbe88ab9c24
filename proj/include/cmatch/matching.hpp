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

// Exact maximum matchings in general graphs (Edmonds' blossom algorithm),
// maximum 2-matchings via the bipartite double cover, and minimum vertex
// covers of bipartite graphs (Konig).

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "cmatch/error.hpp"
#include "cmatch/graph.hpp"

namespace cmatch {

struct Matching {
  std::vector<Edge> edges;  // sorted, each with first < second
  int size() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Vertex-disjoint edges and odd cycles. Cycles list their vertices in cyclic
// order, starting from the smallest id.
struct TwoMatching {
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> odd_cycles;
  int order = 0;
  friend bool operator==(const TwoMatching&, const TwoMatching&) = default;
};

inline bool is_matching_of(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
    if (!g.adjacent(u, v)) return false;
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)])
      return false;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

inline bool is_two_matching_of(const Graph& g, const TwoMatching& tm) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  auto take = [&](Vertex v) {
    if (v < 0 || v >= g.order() || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = 1;
    return true;
  };
  int order = 0;
  for (auto [u, v] : tm.edges) {
    if (u == v || !take(u) || !take(v) || !g.adjacent(u, v)) return false;
    order += 2;
  }
  for (const auto& cyc : tm.odd_cycles) {
    if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
    for (Vertex v : cyc)
      if (!take(v)) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    order += static_cast<int>(cyc.size());
  }
  return order == tm.order;
}

namespace detail {

// Edmonds' algorithm with explicit blossom bases. Free vertices are tried as
// roots in id order and neighbour lists are scanned ascending, so the result
// is deterministic.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(static_cast<std::size_t>(n_), -1) {}

  std::vector<Vertex> solve() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[at(v)] != -1) continue;
      Vertex w = find_path(v);
      while (w != -1) {
        Vertex pw = parent_[at(w)];
        Vertex next = match_[at(pw)];
        match_[at(w)] = pw;
        match_[at(pw)] = w;
        w = next;
      }
    }
    return match_;
  }

 private:
  static std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(at(n_), 0);
    for (;;) {
      a = base_[at(a)];
      seen[at(a)] = 1;
      if (match_[at(a)] == -1) break;
      a = parent_[at(match_[at(a)])];
    }
    for (;;) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      b = parent_[at(match_[at(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[at(v)] != b) {
      in_blossom_[at(base_[at(v)])] = 1;
      in_blossom_[at(base_[at(match_[at(v)])])] = 1;
      parent_[at(v)] = child;
      child = match_[at(v)];
      v = parent_[at(match_[at(v)])];
    }
  }

  // Returns the free endpoint of an augmenting path from root, or -1.
  Vertex find_path(Vertex root) {
    used_.assign(at(n_), 0);
    parent_.assign(at(n_), -1);
    base_.resize(at(n_));
    for (Vertex i = 0; i < n_; ++i) base_[at(i)] = i;
    std::vector<Vertex> queue{root};
    used_[at(root)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex to : g_.neighbours(v)) {
        if (base_[at(v)] == base_[at(to)] || match_[at(v)] == to) continue;
        if (to == root ||
            (match_[at(to)] != -1 && parent_[at(match_[at(to)])] != -1)) {
          Vertex b = lca(v, to);
          in_blossom_.assign(at(n_), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i)
            if (in_blossom_[at(base_[at(i)])]) {
              base_[at(i)] = b;
              if (!used_[at(i)]) {
                used_[at(i)] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[at(to)] == -1) {
          parent_[at(to)] = v;
          if (match_[at(to)] == -1) return to;
          Vertex m = match_[at(to)];
          used_[at(m)] = 1;
          queue.push_back(m);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

// Kuhn's augmenting-path matching on an explicit bipartite graph. Left
// vertices are processed in id order. Returns the right mate of each left
// vertex (-1 if unmatched).
inline std::vector<int> bipartite_matching(
    int left, int right, const std::vector<std::vector<int>>& adj) {
  std::vector<int> mate_left(static_cast<std::size_t>(left), -1);
  std::vector<int> mate_right(static_cast<std::size_t>(right), -1);
  std::vector<int> stamp(static_cast<std::size_t>(right), -1);
  // Iterative DFS so deep graphs cannot overflow the stack.
  for (int root = 0; root < left; ++root) {
    struct Frame {
      int u;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<int> via;  // right vertex used to enter each frame after the first
    bool found = false;
    while (!stack.empty() && !found) {
      Frame& f = stack.back();
      const auto& nb = adj[static_cast<std::size_t>(f.u)];
      if (f.next == nb.size()) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      int r = nb[f.next++];
      if (stamp[static_cast<std::size_t>(r)] == root) continue;
      stamp[static_cast<std::size_t>(r)] = root;
      int owner = mate_right[static_cast<std::size_t>(r)];
      if (owner == -1) {
        // Augment along the stack.
        via.push_back(r);
        for (std::size_t i = 0; i < stack.size(); ++i) {
          int u = stack[i].u;
          int rr = via[i];
          mate_left[static_cast<std::size_t>(u)] = rr;
          mate_right[static_cast<std::size_t>(rr)] = u;
        }
        found = true;
      } else {
        via.push_back(r);
        stack.push_back({owner, 0});
      }
    }
  }
  return mate_left;
}

}  // namespace detail

// Mate of each vertex in a maximum matching (-1 if unmatched).
inline std::vector<Vertex> maximum_mates(const Graph& g) {
  return detail::Blossom(g).solve();
}

inline Matching mates_to_matching(const std::vector<Vertex>& mate) {
  Matching m;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<Vertex>(v))
      m.edges.emplace_back(static_cast<Vertex>(v), mate[v]);
  return m;
}

inline Matching max_matching(const Graph& g) {
  return mates_to_matching(maximum_mates(g));
}

inline int matching_number(const Graph& g) { return max_matching(g).size(); }

// Maximum 2-matching. Its order equals the matching number of the bipartite
// double cover (v_L ~ w_R iff vw in E); the witness is read off the
// functional digraph v -> mate(v_L) whose components are paths and cycles.
inline TwoMatching max_two_matching(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] = g.neighbours(v);
  std::vector<int> succ = detail::bipartite_matching(n, n, adj);
  std::vector<int> pred(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v)
    if (succ[static_cast<std::size_t>(v)] != -1)
      pred[static_cast<std::size_t>(succ[static_cast<std::size_t>(v)])] = v;

  TwoMatching tm;
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  auto take_alternate = [&](const std::vector<Vertex>& walk, std::size_t pairs) {
    for (std::size_t i = 0; i < pairs; ++i)
      tm.edges.push_back(make_edge(walk[2 * i], walk[2 * i + 1]));
  };
  // Paths start at vertices without a predecessor.
  for (Vertex s = 0; s < n; ++s) {
    if (pred[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> walk;
    for (Vertex v = s; v != -1; v = succ[static_cast<std::size_t>(v)]) {
      walk.push_back(v);
      done[static_cast<std::size_t>(v)] = 1;
    }
    take_alternate(walk, walk.size() / 2);
  }
  // Everything left lies on a cycle.
  for (Vertex s = 0; s < n; ++s) {
    if (done[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> cyc;
    for (Vertex v = s; !done[static_cast<std::size_t>(v)];
         v = succ[static_cast<std::size_t>(v)]) {
      cyc.push_back(v);
      done[static_cast<std::size_t>(v)] = 1;
    }
    if (cyc.size() % 2 == 1 && cyc.size() >= 3)
      tm.odd_cycles.push_back(cyc);
    else
      take_alternate(cyc, cyc.size() / 2);
  }
  std::sort(tm.edges.begin(), tm.edges.end());
  std::sort(tm.odd_cycles.begin(), tm.odd_cycles.end());
  tm.order = 2 * static_cast<int>(tm.edges.size());
  for (const auto& c : tm.odd_cycles) tm.order += static_cast<int>(c.size());
  return tm;
}

inline int two_matching_order(const Graph& g) { return max_two_matching(g).order; }

// Minimum vertex cover of a bipartite graph with the given sides (0/1).
inline VertexSet konig_cover(const Graph& g, const std::vector<int>& side) {
  const int n = g.order();
  if (static_cast<int>(side.size()) != n)
    throw StructuralError("konig_cover: one side label per vertex required");
  std::vector<int> left_id(static_cast<std::size_t>(n), -1);
  std::vector<int> right_id(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> lefts, rights;
  for (Vertex v = 0; v < n; ++v) {
    int s = side[static_cast<std::size_t>(v)];
    if (s != 0 && s != 1) throw StructuralError("konig_cover: side must be 0 or 1");
    if (s == 0) {
      left_id[static_cast<std::size_t>(v)] = static_cast<int>(lefts.size());
      lefts.push_back(v);
    } else {
      right_id[static_cast<std::size_t>(v)] = static_cast<int>(rights.size());
      rights.push_back(v);
    }
  }
  std::vector<std::vector<int>> adj(lefts.size());
  for (auto [u, v] : g.edges()) {
    if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)])
      throw StructuralError("konig_cover: graph is not bipartite for these sides");
    Vertex l = side[static_cast<std::size_t>(u)] == 0 ? u : v;
    Vertex r = l == u ? v : u;
    adj[static_cast<std::size_t>(left_id[static_cast<std::size_t>(l)])].push_back(
        right_id[static_cast<std::size_t>(r)]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  auto mate_left = detail::bipartite_matching(static_cast<int>(lefts.size()),
                                              static_cast<int>(rights.size()), adj);
  std::vector<int> mate_right(rights.size(), -1);
  for (std::size_t l = 0; l < lefts.size(); ++l)
    if (mate_left[l] != -1) mate_right[static_cast<std::size_t>(mate_left[l])] = static_cast<int>(l);

  // Z: reachable from free left vertices by alternating paths.
  std::vector<char> zl(lefts.size(), 0), zr(rights.size(), 0);
  std::vector<int> queue;
  for (std::size_t l = 0; l < lefts.size(); ++l)
    if (mate_left[l] == -1) {
      zl[l] = 1;
      queue.push_back(static_cast<int>(l));
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int l = queue[head];
    for (int r : adj[static_cast<std::size_t>(l)]) {
      if (zr[static_cast<std::size_t>(r)]) continue;
      zr[static_cast<std::size_t>(r)] = 1;
      int back = mate_right[static_cast<std::size_t>(r)];
      if (back != -1 && !zl[static_cast<std::size_t>(back)]) {
        zl[static_cast<std::size_t>(back)] = 1;
        queue.push_back(back);
      }
    }
  }
  VertexSet cover;
  for (std::size_t l = 0; l < lefts.size(); ++l)
    if (!zl[l]) cover.push_back(lefts[l]);
  for (std::size_t r = 0; r < rights.size(); ++r)
    if (zr[r]) cover.push_back(rights[r]);
  return normalized(std::move(cover));
}

inline VertexSet konig_cover(const Graph& g) {
  auto side = two_colouring(g);
  if (!side) throw StructuralError("konig_cover: graph is not bipartite");
  return konig_cover(g, *side);
}

inline bool is_factor_critical(const Graph& g) {
  if (!is_connected(g)) throw StructuralError("is_factor_critical: graph is disconnected");
  const int n = g.order();
  if (n % 2 == 0) return false;
  for (Vertex u = 0; u < n; ++u)
    if (2 * matching_number(without_vertex(g, u)) != n - 1) return false;
  return true;
}

}  // namespace cmatch
