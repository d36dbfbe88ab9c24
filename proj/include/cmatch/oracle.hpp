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

// Exhaustive oracles for small graphs. These share no code with the blossom
// or double-cover routines: all are dynamic programmes over vertex subsets.

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "cmatch/error.hpp"
#include "cmatch/graph.hpp"
#include "cmatch/matching.hpp"

namespace cmatch::oracle {

inline constexpr int kMaxOracleOrder = 14;

namespace detail {

using Mask = std::uint32_t;

inline void guard(const Graph& g, const char* who) {
  if (g.order() > kMaxOracleOrder)
    throw PreconditionError(std::string(who) + ": graph too large for exhaustive search");
}

inline std::vector<Mask> neighbour_masks(const Graph& g) {
  std::vector<Mask> nb(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    nb[static_cast<std::size_t>(u)] |= Mask{1} << v;
    nb[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return nb;
}

// best[S] = matching number of g[S].
inline std::vector<int> matching_table(const Graph& g) {
  const int n = g.order();
  auto nb = neighbour_masks(g);
  std::vector<int> best(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int v = std::countr_zero(s);
    Mask rest = s & ~(Mask{1} << v);
    int b = best[rest];
    for (Mask cand = nb[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      b = std::max(b, 1 + best[rest & ~(Mask{1} << u)]);
    }
    best[s] = b;
  }
  return best;
}

// cyc[S] = true iff |S| >= 3 is odd and g[S] has a Hamiltonian cycle.
inline std::vector<char> odd_cycle_table(const Graph& g) {
  const int n = g.order();
  auto nb = neighbour_masks(g);
  const std::size_t full = std::size_t{1} << n;
  // ends[S]: vertices v such that a path from min(S) to v visits exactly S.
  std::vector<Mask> ends(full, 0);
  std::vector<char> cyc(full, 0);
  for (int s = 0; s < n; ++s) ends[std::size_t{1} << s] = Mask{1} << s;
  for (Mask S = 1; S < full; ++S) {
    Mask e = ends[S];
    if (!e) continue;
    int s = std::countr_zero(S);
    int size = std::popcount(S);
    if (size >= 3 && size % 2 == 1)
      for (Mask t = e; t; t &= t - 1)
        if (nb[static_cast<std::size_t>(std::countr_zero(t))] & (Mask{1} << s)) {
          cyc[S] = 1;
          break;
        }
    for (Mask t = e; t; t &= t - 1) {
      int v = std::countr_zero(t);
      // Extend only by vertices above the start so each path has one start.
      Mask ext = nb[static_cast<std::size_t>(v)] & ~S & ~((Mask{2} << s) - 1);
      for (; ext; ext &= ext - 1) {
        int w = std::countr_zero(ext);
        ends[S | (Mask{1} << w)] |= Mask{1} << w;
      }
    }
  }
  return cyc;
}

}  // namespace detail

inline int brute_matching_oracle(const Graph& g) {
  detail::guard(g, "brute_matching_oracle");
  return detail::matching_table(g).back();
}

inline int brute_two_matching_oracle(const Graph& g) {
  detail::guard(g, "brute_two_matching_oracle");
  const int n = g.order();
  auto nb = detail::neighbour_masks(g);
  auto cyc = detail::odd_cycle_table(g);
  std::vector<int> best(std::size_t{1} << n, 0);
  using detail::Mask;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int v = std::countr_zero(s);
    Mask bit = Mask{1} << v;
    Mask rest = s & ~bit;
    int b = best[rest];
    for (Mask cand = nb[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1)
      b = std::max(b, 2 + best[rest & ~(Mask{1} << std::countr_zero(cand))]);
    // Odd cycles through v inside s.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask c = sub | bit;
      if (cyc[c]) b = std::max(b, std::popcount(c) + best[s & ~c]);
      if (sub == 0) break;
    }
    best[s] = b;
  }
  return best.back();
}

// Calls fn on every maximum matching of g exactly once.
inline void for_each_maximum_matching(const Graph& g,
                                      const std::function<void(const Matching&)>& fn) {
  detail::guard(g, "for_each_maximum_matching");
  auto best = detail::matching_table(g);
  auto nb = detail::neighbour_masks(g);
  using detail::Mask;
  Matching cur;
  std::function<void(Mask)> rec = [&](Mask s) {
    if (best[s] == 0) {
      fn(cur);
      return;
    }
    int v = std::countr_zero(s);
    Mask rest = s & ~(Mask{1} << v);
    if (best[rest] == best[s]) rec(rest);
    for (Mask cand = nb[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      Mask r2 = rest & ~(Mask{1} << u);
      if (1 + best[r2] != best[s]) continue;
      cur.edges.emplace_back(v, u);
      rec(r2);
      cur.edges.pop_back();
    }
  };
  rec((Mask{1} << g.order()) - 1);
}

// A 2-matching up to the choice of Hamiltonian cycle on each odd-cycle
// vertex set.
struct TwoMatchingShape {
  std::vector<Edge> edges;
  std::vector<VertexSet> cycle_sets;
  int order() const {
    int o = 2 * static_cast<int>(edges.size());
    for (const auto& c : cycle_sets) o += static_cast<int>(c.size());
    return o;
  }
  int cycle_vertices() const {
    int o = 0;
    for (const auto& c : cycle_sets) o += static_cast<int>(c.size());
    return o;
  }
};

// Calls fn on every maximum-order 2-matching shape. With
// min_cycle_vertices set, only shapes that also minimise the number of
// vertices on odd cycles (among maximum ones) are produced.
inline void for_each_maximum_two_matching(
    const Graph& g, bool min_cycle_vertices,
    const std::function<void(const TwoMatchingShape&)>& fn) {
  detail::guard(g, "for_each_maximum_two_matching");
  const int n = g.order();
  auto nb = detail::neighbour_masks(g);
  auto cyc = detail::odd_cycle_table(g);
  using detail::Mask;
  // Score = order * W - (cycle vertices if minimising), W > n.
  const int W = min_cycle_vertices ? 64 : 1;
  std::vector<int> best(std::size_t{1} << n, 0);
  auto cycle_score = [&](Mask c) {
    int sz = std::popcount(c);
    return sz * W - (min_cycle_vertices ? sz : 0);
  };
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int v = std::countr_zero(s);
    Mask bit = Mask{1} << v;
    Mask rest = s & ~bit;
    int b = best[rest];
    for (Mask cand = nb[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1)
      b = std::max(b, 2 * W + best[rest & ~(Mask{1} << std::countr_zero(cand))]);
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask c = sub | bit;
      if (cyc[c]) b = std::max(b, cycle_score(c) + best[s & ~c]);
      if (sub == 0) break;
    }
    best[s] = b;
  }
  TwoMatchingShape cur;
  std::function<void(Mask)> rec = [&](Mask s) {
    if (s == 0) {
      fn(cur);
      return;
    }
    int v = std::countr_zero(s);
    Mask bit = Mask{1} << v;
    Mask rest = s & ~bit;
    if (best[rest] == best[s]) rec(rest);
    for (Mask cand = nb[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      Mask r2 = rest & ~(Mask{1} << u);
      if (2 * W + best[r2] != best[s]) continue;
      cur.edges.emplace_back(v, u);
      rec(r2);
      cur.edges.pop_back();
    }
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask c = sub | bit;
      if (cyc[c] && cycle_score(c) + best[s & ~c] == best[s]) {
        VertexSet set;
        for (Mask t = c; t; t &= t - 1) set.push_back(std::countr_zero(t));
        cur.cycle_sets.push_back(std::move(set));
        rec(s & ~c);
        cur.cycle_sets.pop_back();
      }
      if (sub == 0) break;
    }
  };
  rec((Mask{1} << n) - 1);
}

}  // namespace cmatch::oracle
