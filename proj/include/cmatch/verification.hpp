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

#include <array>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmatch/connected_matching.hpp"
#include "cmatch/error.hpp"
#include "cmatch/gallai_edmonds.hpp"
#include "cmatch/graph.hpp"
#include "cmatch/io.hpp"
#include "cmatch/matching.hpp"
#include "cmatch/oracle.hpp"
#include "cmatch/parallel.hpp"
#include "cmatch/random.hpp"
#include "cmatch/reduction.hpp"

namespace cmatch {

struct VerifyReport {
  std::string lemma;
  std::string mode;  // "exhaustive" or "sampled"
  std::optional<std::uint64_t> seed;
  BigInt space_size = 0;
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<Failure> failures;
  bool passed() const { return failure_count == 0; }
};

namespace detail {

inline VerifyReport make_report(std::string lemma, std::string mode,
                                std::optional<std::uint64_t> seed, BigInt space, Tally&& t) {
  VerifyReport r;
  r.lemma = std::move(lemma);
  r.mode = std::move(mode);
  r.seed = seed;
  r.space_size = std::move(space);
  r.checked = t.checked;
  r.failure_count = t.failure_count;
  r.counts = std::move(t.counts);
  r.failures = std::move(t.failures);
  return r;
}

// A connected matching with `edges` edges in some colour, every colour
// plain.
inline bool has_mono_cm(const ColouredGraph& g, int edges) {
  std::vector<int> t(static_cast<std::size_t>(g.colours()), std::max(1, 2 * edges));
  return has_cm_at_least(g, t, g.colours(), CmMode::matching).has_value();
}

using Bits = std::uint32_t;

inline Bits bits_of(const VertexSet& s) {
  Bits b = 0;
  for (Vertex v : s) b |= Bits{1} << v;
  return b;
}

inline VertexSet set_of(Bits b) {
  VertexSet s;
  for (; b; b &= b - 1) s.push_back(std::countr_zero(b));
  return s;
}

inline bool block_has(const ColouredGraph& g, const VertexSet& a, const VertexSet& b, int c) {
  for (Vertex u : a)
    for (Vertex v : b)
      if (u != v && !g.has_colour(u, v, c)) return false;
  return true;
}

inline bool inside_has(const ColouredGraph& g, const VertexSet& a, int c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!g.has_colour(a[i], a[j], c)) return false;
  return true;
}

inline constexpr std::array<std::array<int, 3>, 6> kPermutations{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// Colouring of K_n with colour (index / k^e) % k on the e-th edge of the
// lexicographic edge order.
inline ColouredGraph decode_colouring(int n, int k, const std::vector<Edge>& edges,
                                      std::uint64_t index) {
  ColouredGraph g(n, k);
  for (auto [u, v] : edges) {
    g.set_mask(u, v, colour_bit(static_cast<int>(index % static_cast<std::uint64_t>(k))));
    index /= static_cast<std::uint64_t>(k);
  }
  return g;
}

inline ColouredGraph random_colouring(int n, int k, const std::vector<Edge>& edges, Rng& rng) {
  ColouredGraph g(n, k);
  for (auto [u, v] : edges)
    g.set_mask(u, v, colour_bit(static_cast<int>(rng.below(static_cast<std::uint64_t>(k)))));
  return g;
}

inline BigInt int_power(int base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Three-colour extremal structure.

struct StructureC {
  int m = 0;
  VertexSet X, Y, Z, W;
  // Colour indices playing red, blue and green.
  int red = 0, blue = 1, green = 2;
};

inline bool satisfies_structure_c(const ColouredGraph& g, const StructureC& s) {
  using detail::block_has;
  using detail::inside_has;
  const int m = s.m;
  if (static_cast<int>(s.X.size()) != m || static_cast<int>(s.Y.size()) != m ||
      static_cast<int>(s.Z.size()) > m)
    return false;
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const VertexSet* part : {&s.X, &s.Y, &s.Z, &s.W})
    for (Vertex v : *part) {
      if (v < 0 || v >= g.order()) return false;
      ++hits[static_cast<std::size_t>(v)];
    }
  for (int h : hits)
    if (h != 1) return false;
  if (!block_has(g, s.X, s.Z, s.red) || !block_has(g, s.Y, s.W, s.red)) return false;
  if (!block_has(g, s.X, s.W, s.blue) || !block_has(g, s.Y, s.Z, s.blue)) return false;
  if (!block_has(g, s.Z, s.W, s.green)) return false;
  if (static_cast<int>(s.W.size()) >= m + 2 && !inside_has(g, s.W, s.green)) return false;
  if (!s.Z.empty() && !block_has(g, s.X, s.Y, s.green)) return false;
  return true;
}

// First witness in (colour permutation, X, Y, Z) order, if any.
inline std::optional<StructureC> find_structure_c(const ColouredGraph& g, int m) {
  using detail::Bits;
  const int n = g.order();
  if (g.colours() != 3) throw PreconditionError("find_structure_c: need a 3-coloured graph");
  if (n > 24) throw PreconditionError("find_structure_c: graph too large");
  if (m < 0 || 2 * m > n) return std::nullopt;
  const Bits all = (Bits{1} << n) - 1;
  for (const auto& perm : detail::kPermutations) {
    const int red = perm[0], blue = perm[1], green = perm[2];
    for (Bits x = 0; x <= all; ++x) {
      if (std::popcount(x) != m) continue;
      const Bits rest_x = all & ~x;
      for (Bits y = rest_x;; y = (y - 1) & rest_x) {
        if (std::popcount(y) == m) {
          const Bits rest = rest_x & ~y;
          Bits forced_z = 0, free = 0;
          bool dead = false;
          for (Bits r = rest; r; r &= r - 1) {
            const Vertex v = std::countr_zero(r);
            bool can_z = true, can_w = true;
            for (Bits t = x; t; t &= t - 1) {
              can_z &= g.has_colour(std::countr_zero(t), v, red);
              can_w &= g.has_colour(std::countr_zero(t), v, blue);
            }
            for (Bits t = y; t; t &= t - 1) {
              can_z &= g.has_colour(std::countr_zero(t), v, blue);
              can_w &= g.has_colour(std::countr_zero(t), v, red);
            }
            if (!can_z && !can_w) {
              dead = true;
              break;
            }
            if (can_z && can_w)
              free |= Bits{1} << v;
            else if (can_z)
              forced_z |= Bits{1} << v;
          }
          if (!dead && std::popcount(forced_z) <= m) {
            for (Bits extra = free;; extra = (extra - 1) & free) {
              Bits z = forced_z | extra;
              if (std::popcount(z) <= m) {
                StructureC s{m, detail::set_of(x), detail::set_of(y), detail::set_of(z),
                             detail::set_of(rest & ~z), red, blue, green};
                if (satisfies_structure_c(g, s)) return s;
              }
              if (extra == 0) break;
            }
          }
        }
        if (y == 0) break;
      }
    }
  }
  return std::nullopt;
}

// X = [0, m), Y = [m, 2m), Z next, W last.
inline StructureC structure_c_layout(int m, int z, int w) {
  StructureC s;
  s.m = m;
  Vertex v = 0;
  for (int i = 0; i < m; ++i) s.X.push_back(v++);
  for (int i = 0; i < m; ++i) s.Y.push_back(v++);
  for (int i = 0; i < z; ++i) s.Z.push_back(v++);
  for (int i = 0; i < w; ++i) s.W.push_back(v++);
  return s;
}

// The structure-(C) colour pattern on 2m + z + w vertices (colours 0, 1, 2
// as red, blue, green). Pairs the pattern leaves open are coloured from the
// seed, rejecting fills that create a monochromatic cm(m+1); after 64
// rejected fills a fixed safe fill is used.
inline ColouredGraph gen_structure_c_pattern(int m, int z, int w, std::uint64_t seed) {
  if (m < 0 || z < 0 || w < 0 || z > m)
    throw PreconditionError("structure-(C): need m, |Z|, |W| >= 0 and |Z| <= m");
  const int n = 2 * m + z + w;
  if (n > 24) throw PreconditionError("structure-(C): graph too large");
  enum { X, Y, Z, W };
  auto block = [&](Vertex v) { return v < m ? X : v < 2 * m ? Y : v < 2 * m + z ? Z : W; };
  constexpr int red = 0, blue = 1, green = 2;
  // Required colour, or -(safe colour) - 1 for an open pair.
  auto rule = [&](Vertex u, Vertex v) {
    int a = block(u), b = block(v);
    if (a > b) std::swap(a, b);
    if ((a == X && b == Z) || (a == Y && b == W)) return red;
    if ((a == X && b == W) || (a == Y && b == Z)) return blue;
    if (a == Z && b == W) return green;
    if (a == W && b == W) return w >= m + 2 ? green : -green - 1;
    if (a == X && b == Y) return z > 0 ? green : -green - 1;
    if (a == X) return -blue - 1;
    if (a == Y) return -red - 1;
    return -green - 1;
  };
  auto build = [&](Rng* rng) {
    ColouredGraph g(n, 3);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        int r = rule(u, v);
        int c = r >= 0 ? r : -r - 1;
        if (r < 0 && rng && rng->bernoulli(0.5)) c = static_cast<int>(rng->below(3));
        g.set_mask(u, v, colour_bit(c));
      }
    return g;
  };
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    ColouredGraph g = build(&rng);
    if (!detail::has_mono_cm(g, m + 1)) return g;
  }
  return build(nullptr);
}

inline ColouredGraph gen_structure_c(int m, int z, int w, std::uint64_t seed) {
  if (2 * m + z + w != 4 * m + 1)
    throw PreconditionError("structure-(C): sizes must sum to 4m + 1");
  return gen_structure_c_pattern(m, z, w, seed);
}

namespace detail {

inline VerifyReport three_colour_run(const char* lemma, int m, std::optional<std::uint64_t> sample,
                                     std::uint64_t seed, int jobs,
                                     const std::function<void(const ColouredGraph&, std::uint64_t, Tally&)>& check) {
  if (m < 0) throw PreconditionError(std::string(lemma) + ": m must be non-negative");
  const int n = 4 * m + 1;
  std::vector<Edge> edges = complete_graph(n).edges();
  BigInt space = int_power(3, edges.size());
  if (!sample) {
    if (m > 1)
      throw PreconditionError(std::string(lemma) + ": exhaustive mode only for m <= 1; use a sample");
    const auto total = space.convert_to<std::uint64_t>();
    Tally t = parallel_tally(total, jobs, [&](std::uint64_t i, Tally& tally) {
      check(decode_colouring(n, 3, edges, i), i, tally);
    });
    return make_report(lemma, "exhaustive", std::nullopt, space, std::move(t));
  }
  // Seeded uniform colourings, then eight generated structure-(C)
  // colourings per admissible |Z|.
  const std::uint64_t generated = 8 * static_cast<std::uint64_t>(m + 1);
  Tally t = parallel_tally(*sample + generated, jobs, [&](std::uint64_t i, Tally& tally) {
    if (i < *sample) {
      Rng rng(derive_seed(seed, i));
      check(random_colouring(n, 3, edges, rng), i, tally);
    } else {
      const int z = static_cast<int>((i - *sample) % static_cast<std::uint64_t>(m + 1));
      check(gen_structure_c(m, z, 2 * m + 1 - z, derive_seed(seed, i)), i, tally);
    }
  });
  return make_report(lemma, "sampled", seed, space, std::move(t));
}

}  // namespace detail

// Every 3-colouring of K_{4m+1} without a monochromatic cm(m+1) has a
// structure-(C) partition under some colour permutation.
inline VerifyReport verify_lemma_three_colours(int m, std::optional<std::uint64_t> sample = {},
                                               std::uint64_t seed = 0, int jobs = 1) {
  return detail::three_colour_run(
      "lemma51", m, sample, seed, jobs, [m](const ColouredGraph& g, std::uint64_t i, Tally& t) {
        ++t.checked;
        if (detail::has_mono_cm(g, m + 1)) {
          t.count("mono_cm");
        } else if (find_structure_c(g, m)) {
          t.count("structure_c");
        } else {
          t.fail(i, "no monochromatic cm(m+1) and no structure-(C) partition", to_graph_string(g));
        }
      });
}

// Every 3-colouring of K_{4m+1} has a monochromatic cm(m); when there is no
// cm(m+1), the blue [X, W] block of the structure-(C) witness carries one.
inline VerifyReport verify_corollary_cm(int m, std::optional<std::uint64_t> sample = {},
                                        std::uint64_t seed = 0, int jobs = 1) {
  return detail::three_colour_run(
      "corollary", m, sample, seed, jobs, [m](const ColouredGraph& g, std::uint64_t i, Tally& t) {
        ++t.checked;
        if (m == 0 || detail::has_mono_cm(g, m))
          t.count("mono_cm_m");
        else
          t.fail(i, "no monochromatic cm(m)", to_graph_string(g));
        if (detail::has_mono_cm(g, m + 1)) return;
        auto s = find_structure_c(g, m);
        if (!s) {
          t.fail(i, "no monochromatic cm(m+1) and no structure-(C) partition", to_graph_string(g));
          return;
        }
        Graph blue(g.order());
        for (Vertex x : s->X)
          for (Vertex w : s->W)
            if (g.has_colour(x, w, s->blue)) blue.add_edge(x, w);
        int best = 0;
        for (const auto& comp : connected_components(blue))
          best = std::max(best, matching_number(induced(blue, comp)));
        if (best >= m)
          t.count("blue_cm_in_xw");
        else
          t.fail(i, "structure-(C) witness without a blue cm(m) in [X,W]", to_graph_string(g));
      });
}

// ---------------------------------------------------------------------------
// Two-colourings of K_{2m,2m+1}: A = [0, 2m), B = [2m, 4m+1).

struct StructureB2 {
  int m = 0;
  VertexSet X, Y, Z, W;
};

inline bool satisfies_structure_b2(const ColouredGraph& g, const StructureB2& s) {
  using detail::block_has;
  const int m = s.m;
  if (static_cast<int>(s.X.size()) != m || static_cast<int>(s.Y.size()) != m) return false;
  if (static_cast<int>(s.Z.size() + s.W.size()) != 2 * m + 1) return false;
  for (Vertex v : s.X)
    if (v >= 2 * m || contains(s.Y, v)) return false;
  for (Vertex v : s.Y)
    if (v >= 2 * m) return false;
  for (Vertex v : s.Z)
    if (v < 2 * m || contains(s.W, v)) return false;
  for (Vertex v : s.W)
    if (v < 2 * m || v > 4 * m) return false;
  return block_has(g, s.X, s.Z, 0) && block_has(g, s.Y, s.W, 0) && block_has(g, s.X, s.W, 1) &&
         block_has(g, s.Y, s.Z, 1);
}

inline std::optional<StructureB2> find_structure_b2(const ColouredGraph& g, int m) {
  using detail::Bits;
  if (g.order() != 4 * m + 1 || g.colours() != 2)
    throw PreconditionError("find_structure_b2: need a 2-coloured graph on 4m + 1 vertices");
  const Bits a_all = (Bits{1} << (2 * m)) - 1;
  for (Bits x = 0; x <= a_all; ++x) {
    if (std::popcount(x) != m) continue;
    StructureB2 s{m, detail::set_of(x), detail::set_of(a_all & ~x), {}, {}};
    bool ok = true;
    for (Vertex b = 2 * m; b <= 4 * m && ok; ++b) {
      bool z = true, w = true;
      for (Vertex u : s.X) {
        z &= g.has_colour(u, b, 0);
        w &= g.has_colour(u, b, 1);
      }
      for (Vertex u : s.Y) {
        z &= g.has_colour(u, b, 1);
        w &= g.has_colour(u, b, 0);
      }
      if (z)
        s.Z.push_back(b);
      else if (w)
        s.W.push_back(b);
      else
        ok = false;
    }
    if (ok) return s;
  }
  return std::nullopt;
}

// The (B2) colouring with X = [0, m), Y = [m, 2m), Z = [2m, 2m+z) and W the
// rest of B; colour 0 red, 1 blue.
inline ColouredGraph gen_structure_b2(int m, int z) {
  if (m < 1 || z < 0 || z > 2 * m + 1)
    throw PreconditionError("structure-(B2): need m >= 1 and 0 <= |Z| <= 2m + 1");
  ColouredGraph g(4 * m + 1, 2);
  for (Vertex a = 0; a < 2 * m; ++a)
    for (Vertex b = 2 * m; b <= 4 * m; ++b) {
      bool in_x = a < m, in_z = b < 2 * m + z;
      g.set_mask(a, b, colour_bit(in_x == in_z ? 0 : 1));
    }
  return g;
}

inline VerifyReport verify_lemma_bip(int m, std::optional<std::uint64_t> sample = {},
                                     std::uint64_t seed = 0, int jobs = 1) {
  if (m < 1) throw PreconditionError("lemma52: m must be at least 1");
  if (m > 3) throw PreconditionError("lemma52: m must be at most 3");
  const int n = 4 * m + 1;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 2 * m; ++a)
    for (Vertex b = 2 * m; b < n; ++b) edges.emplace_back(a, b);
  BigInt space = detail::int_power(2, edges.size());
  auto check = [&](const ColouredGraph& g, std::uint64_t i, Tally& t) {
    ++t.checked;
    if (detail::has_mono_cm(g, m + 1))
      t.count("b1_mono_cm");
    else if (find_structure_b2(g, m))
      t.count("b2_partition");
    else
      t.fail(i, "neither a monochromatic cm(m+1) nor a (B2) partition", to_graph_string(g));
  };
  auto decode = [&](std::uint64_t index) {
    ColouredGraph g(n, 2);
    for (auto [u, v] : edges) {
      g.set_mask(u, v, colour_bit(static_cast<int>(index & 1)));
      index >>= 1;
    }
    return g;
  };
  if (!sample) {
    if (m > 2) throw PreconditionError("lemma52: exhaustive mode only for m <= 2; use a sample");
    const auto total = space.convert_to<std::uint64_t>();
    Tally t = parallel_tally(total, jobs, [&](std::uint64_t i, Tally& tally) { check(decode(i), i, tally); });
    return detail::make_report("lemma52", "exhaustive", std::nullopt, space, std::move(t));
  }
  Tally t = parallel_tally(*sample, jobs, [&](std::uint64_t i, Tally& tally) {
    Rng rng(derive_seed(seed, i));
    check(decode(rng.next()), i, tally);
  });
  return detail::make_report("lemma52", "sampled", seed, space, std::move(t));
}

// ---------------------------------------------------------------------------
// Random-graph verifiers for the matching-theoretic lemmas.

namespace detail {

inline Graph verifier_graph(std::uint64_t seed, std::uint64_t i, int max_n) {
  Rng rng(derive_seed(seed, i));
  int n = rng.uniform_int(1, max_n);
  return random_graph(n, rng.unit(), rng);
}

inline ColouredGraph as_coloured(const Graph& g) { return monochromatic(g, 1, 0); }

}  // namespace detail

inline VerifyReport verify_ge_random(std::uint64_t trials, std::uint64_t seed, int max_n,
                                     int jobs = 1) {
  if (max_n < 1 || max_n > kMaxGETheoremOrder)
    throw PreconditionError("verify ge: n must be in [1, 12]");
  Tally t = parallel_tally(trials, jobs, [&](std::uint64_t i, Tally& tally) {
    Graph g = detail::verifier_graph(seed, i, max_n);
    GETheoremReport r = verify_ge_theorem(g);
    ++tally.checked;
    tally.count("maximum_matchings", static_cast<std::uint64_t>(r.matchings_checked));
    if (!r.m1) tally.fail(i, "M1 fails", to_graph_string(detail::as_coloured(g)));
    if (!r.m2) tally.fail(i, "M2 fails", to_graph_string(detail::as_coloured(g)));
  });
  return detail::make_report("ge", "sampled", seed, BigInt(trials), std::move(t));
}

// Checks the extension against brute-force oracles: it contains g, keeps
// the invariant, has the star template and is edge-maximal.
inline VerifyReport verify_extensions_random(CmMode which, std::uint64_t trials,
                                             std::uint64_t seed, int max_n, int jobs = 1) {
  if (max_n < 1 || max_n > oracle::kMaxOracleOrder)
    throw PreconditionError("verify extension: n must be in [1, 14]");
  const bool two = which == CmMode::two_matching;
  Tally t = parallel_tally(trials, jobs, [&](std::uint64_t i, Tally& tally) {
    Graph g = detail::verifier_graph(seed, i, max_n);
    auto oracle_value = [&](const Graph& h) {
      return two ? oracle::brute_two_matching_oracle(h) : oracle::brute_matching_oracle(h);
    };
    const int value = oracle_value(g);
    StarBlowup s = two ? maximal_two_matching_extension(g, value + 1)
                       : maximal_star_extension(g, value + 1);
    ++tally.checked;
    const int n = g.order();
    auto bad = [&](const char* what) { tally.fail(i, what, to_graph_string(detail::as_coloured(g))); };
    if (!star_partitions(n, s)) return bad("star blobs do not partition the vertices");
    Graph h = star_graph(n, s);
    if (!is_subgraph(g, h)) return bad("extension does not contain the input");
    if (oracle_value(h) != value) return bad("extension changes the invariant");
    if (two) {
      int big = 0;
      for (const auto& leaf : s.leaves) big += leaf.size() > 1;
      if (big > 1) return bad("more than one non-singleton leaf");
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (h.adjacent(u, v)) continue;
        Graph bigger = h;
        bigger.add_edge(u, v);
        if (oracle_value(bigger) <= value) return bad("extension is not edge-maximal");
      }
    tally.count("pairs_added", static_cast<std::uint64_t>(h.size() - g.size()));
  });
  return detail::make_report(two ? "lemma36" : "lemma33", "sampled", seed, BigInt(trials), std::move(t));
}

// A connected graph on n >= 2 nu + 2 vertices: a head set attached to every
// other vertex through at least one edge, extra edges kept only while the
// matching bound holds, then a random relabelling.
inline Graph random_critical_instance(Rng& rng, int max_n) {
  const int n = rng.uniform_int(4, std::max(4, max_n));
  const int heads = rng.uniform_int(1, (n - 2) / 2);
  Graph g(n);
  for (Vertex t = heads; t < n; ++t) {
    g.add_edge(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(heads))), t);
  }
  for (Vertex h = 0; h < heads; ++h)
    if (!g.adjacent(h, heads)) g.add_edge(h, heads);
  const double p = rng.unit() * 0.5;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) || !rng.bernoulli(p)) continue;
      g.add_edge(u, v);
      if (2 * matching_number(g) + 2 > n) g.remove_edge(u, v);
    }
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(i))]);
  Graph out(n);
  for (auto [u, v] : g.edges())
    out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

inline VerifyReport verify_critical_random(std::uint64_t trials, std::uint64_t seed, int max_n,
                                           int jobs = 1) {
  if (max_n < 4 || max_n > 40) throw PreconditionError("verify critical: n must be in [4, 40]");
  Tally t = parallel_tally(trials, jobs, [&](std::uint64_t i, Tally& tally) {
    Rng rng(derive_seed(seed, i));
    Graph g = random_critical_instance(rng, max_n);
    const int nu = g.order() <= oracle::kMaxOracleOrder ? oracle::brute_matching_oracle(g)
                                                        : matching_number(g);
    ++tally.checked;
    if (!is_connected(g) || g.order() < 2 * nu + 2) {
      tally.fail(i, "generator produced an instance outside the hypotheses",
                 to_graph_string(detail::as_coloured(g)));
      return;
    }
    Vertex u = critical_vertex(g, nu);
    Graph h = without_vertex(g, u);
    const int after = h.order() <= oracle::kMaxOracleOrder ? oracle::brute_matching_oracle(h)
                                                           : matching_number(h);
    if (after != nu - 1)
      tally.fail(i, "deleting the returned vertex does not lower nu",
                 to_graph_string(detail::as_coloured(g)));
  });
  return detail::make_report("corollary35", "sampled", seed, BigInt(trials), std::move(t));
}

struct TwoMatchingCoverResult {
  VertexSet d, d_prime, neighbourhood;
  std::uint64_t shapes = 0;
  std::uint64_t satisfying = 0;
  bool universal() const { return shapes == satisfying; }
  bool existential() const { return satisfying > 0; }
};

// Enumerates the maximum 2-matchings that minimise the number of odd-cycle
// vertices and counts those that cover V - D' and match N(D') into D'.
inline TwoMatchingCoverResult verify_two_matching_cover(const Graph& g) {
  if (g.order() > 12) throw PreconditionError("verify_two_matching_cover: graph too large");
  const int n = g.order();
  TwoMatchingCoverResult r;
  r.d = ge_decompose(g).D;
  Graph gd = induced(g, r.d);
  for (std::size_t i = 0; i < r.d.size(); ++i)
    if (gd.degree(static_cast<Vertex>(i)) == 0) r.d_prime.push_back(r.d[i]);
  for (Vertex v : r.d_prime)
    for (Vertex w : g.neighbours(v)) r.neighbourhood.push_back(w);
  std::sort(r.neighbourhood.begin(), r.neighbourhood.end());
  r.neighbourhood.erase(std::unique(r.neighbourhood.begin(), r.neighbourhood.end()),
                        r.neighbourhood.end());
  oracle::for_each_maximum_two_matching(g, true, [&](const oracle::TwoMatchingShape& s) {
    ++r.shapes;
    std::vector<char> covered(static_cast<std::size_t>(n), 0), matched_into(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (auto [u, v] : s.edges) {
      covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = 1;
      if (contains(r.d_prime, u)) matched_into[static_cast<std::size_t>(v)] = 1;
      if (contains(r.d_prime, v)) matched_into[static_cast<std::size_t>(u)] = 1;
    }
    for (const auto& c : s.cycle_sets)
      for (Vertex v : c) {
        covered[static_cast<std::size_t>(v)] = 1;
        if (contains(r.d_prime, v)) ok = false;
      }
    for (Vertex v = 0; v < n; ++v)
      if (!covered[static_cast<std::size_t>(v)] && !contains(r.d_prime, v)) ok = false;
    for (Vertex a : r.neighbourhood)
      if (!matched_into[static_cast<std::size_t>(a)]) ok = false;
    if (ok) ++r.satisfying;
  });
  return r;
}

inline VerifyReport verify_two_matching_cover_random(std::uint64_t trials, std::uint64_t seed, int max_n,
                                              int jobs = 1) {
  if (max_n < 1 || max_n > 12) throw PreconditionError("verify pulleyblank: n must be in [1, 12]");
  Tally t = parallel_tally(trials, jobs, [&](std::uint64_t i, Tally& tally) {
    Graph g = detail::verifier_graph(seed, i, max_n);
    TwoMatchingCoverResult r = verify_two_matching_cover(g);
    ++tally.checked;
    tally.count("shapes", r.shapes);
    tally.count(r.universal() ? "universal_holds" : "universal_fails");
    if (!r.existential())
      tally.fail(i, "no minimising maximum 2-matching meets the cover conditions",
                 to_graph_string(detail::as_coloured(g)));
  });
  return detail::make_report("pulleyblank", "sampled", seed, BigInt(trials), std::move(t));
}

// ---------------------------------------------------------------------------
// Stability structure on 3-coloured K_{4m}.

enum class FourthBlock { yz, yw };

inline const char* to_string(FourthBlock f) { return f == FourthBlock::yz ? "YZ" : "YW"; }

struct BlockDefect {
  std::string block;
  int wrong = 0;
  int total = 0;
  Rational fraction() const { return total ? Rational(wrong, total) : Rational(0); }
};

// Wrong-coloured pairs in [X,Z] red, [Y,W] red, [X,W] blue and the fourth
// block blue.
inline std::vector<BlockDefect> stability_defects(const ColouredGraph& g, const StructureC& p,
                                                  FourthBlock fourth) {
  auto count = [&](const char* name, const VertexSet& a, const VertexSet& b, int c) {
    BlockDefect d{name, 0, 0};
    for (Vertex u : a)
      for (Vertex v : b) {
        ++d.total;
        if (!g.has_colour(u, v, c)) ++d.wrong;
      }
    return d;
  };
  return {count("XZ", p.X, p.Z, p.red), count("YW", p.Y, p.W, p.red),
          count("XW", p.X, p.W, p.blue),
          fourth == FourthBlock::yz ? count("YZ", p.Y, p.Z, p.blue) : count("YW", p.Y, p.W, p.blue)};
}

struct StabilityReport {
  int m = 0;
  Rational eps, slack;
  FourthBlock fourth = FourthBlock::yz;
  std::string search;
  std::optional<std::uint64_t> seed;
  std::uint64_t candidates = 0;
  StructureC best;
  std::vector<BlockDefect> defects;
  int total_wrong = 0;
  bool within_slack = false;
};

namespace detail {

inline int total_wrong(const std::vector<BlockDefect>& d) {
  int s = 0;
  for (const auto& b : d) s += b.wrong;
  return s;
}

// With X, Y and the colour roles fixed, each remaining vertex independently
// joins whichever of Z, W costs fewer wrong pairs (W on ties).
inline StructureC place_rest(const ColouredGraph& g, int m, const VertexSet& x, const VertexSet& y,
                             const std::array<int, 3>& perm, FourthBlock fourth) {
  StructureC s{m, x, y, {}, {}, perm[0], perm[1], perm[2]};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (contains(x, v) || contains(y, v)) continue;
    int cost_z = 0, cost_w = 0;
    for (Vertex u : x) {
      cost_z += !g.has_colour(u, v, s.red);
      cost_w += !g.has_colour(u, v, s.blue);
    }
    for (Vertex u : y) {
      if (fourth == FourthBlock::yz) {
        cost_z += !g.has_colour(u, v, s.blue);
        cost_w += !g.has_colour(u, v, s.red);
      } else {
        cost_w += !g.has_colour(u, v, s.red) + !g.has_colour(u, v, s.blue);
      }
    }
    (cost_z < cost_w ? s.Z : s.W).push_back(v);
  }
  return s;
}

}  // namespace detail

// Best partition with |X| = |Y| = m, minimising the total number of
// wrong-coloured pairs over the four blocks. Exhaustive over X and Y when
// that is at most a few million candidates, otherwise a seeded local search
// (a heuristic: a large defect is not a disproof).
inline StabilityReport verify_stability_structure(const ColouredGraph& g, int m,
                                                  const Rational& eps, const Rational& slack,
                                                  FourthBlock fourth = FourthBlock::yz,
                                                  std::uint64_t seed = 0) {
  using detail::Bits;
  const int n = g.order();
  if (g.colours() != 3) throw PreconditionError("stability: need a 3-coloured graph");
  if (m < 1 || n != 4 * m) throw PreconditionError("stability: need a colouring of K_{4m}, m >= 1");
  if (n > 24) throw PreconditionError("stability: graph too large");
  if (!(g.support() == complete_graph(n))) throw PreconditionError("stability: colouring is not complete");
  const int big = clamp_to_int(ceil_of((1 + eps) * m));
  if (detail::has_mono_cm(g, big))
    throw PreconditionError("stability: colouring has a monochromatic cm(" + std::to_string(big) + ")");

  StabilityReport rep;
  rep.m = m;
  rep.eps = eps;
  rep.slack = slack;
  rep.fourth = fourth;
  int best_cost = std::numeric_limits<int>::max();
  auto consider = [&](const StructureC& s) {
    ++rep.candidates;
    auto d = stability_defects(g, s, fourth);
    int cost = detail::total_wrong(d);
    if (cost < best_cost) {
      best_cost = cost;
      rep.best = s;
      rep.defects = std::move(d);
    }
    return cost;
  };
  auto binom = [](int a, int b) {
    double r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  const Bits all = (Bits{1} << n) - 1;
  if (binom(n, m) * binom(n - m, m) <= 5e6) {
    rep.search = "exhaustive";
    for (const auto& perm : detail::kPermutations)
      for (Bits x = 0; x <= all; ++x) {
        if (std::popcount(x) != m) continue;
        const Bits rest = all & ~x;
        for (Bits y = rest;; y = (y - 1) & rest) {
          if (std::popcount(y) == m)
            consider(detail::place_rest(g, m, detail::set_of(x), detail::set_of(y), perm, fourth));
          if (y == 0) break;
        }
      }
  } else {
    rep.search = "local";
    rep.seed = seed;
    for (int restart = 0; restart < 32; ++restart) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
      std::vector<Vertex> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[static_cast<std::size_t>(rng.below(i))]);
      const auto& perm = detail::kPermutations[static_cast<std::size_t>(rng.below(6))];
      VertexSet x(order.begin(), order.begin() + m), y(order.begin() + m, order.begin() + 2 * m);
      int cost = consider(detail::place_rest(g, m, normalized(x), normalized(y), perm, fourth));
      for (bool improved = true; improved;) {
        improved = false;
        // Swap a vertex of X or Y with an outside vertex (or each other).
        for (int side = 0; side < 2 && !improved; ++side)
          for (std::size_t i = 0; i < static_cast<std::size_t>(m) && !improved; ++i)
            for (Vertex v = 0; v < n && !improved; ++v) {
              VertexSet nx = x, ny = y;
              VertexSet& moving = side == 0 ? nx : ny;
              VertexSet& other = side == 0 ? ny : nx;
              if (contains(moving, v)) continue;
              if (auto it = std::find(other.begin(), other.end(), v); it != other.end())
                *it = moving[i];
              moving[i] = v;
              int c = consider(detail::place_rest(g, m, normalized(nx), normalized(ny), perm, fourth));
              if (c < cost) {
                cost = c;
                x = std::move(nx);
                y = std::move(ny);
                improved = true;
              }
            }
      }
    }
  }
  rep.total_wrong = best_cost;
  rep.within_slack = std::all_of(rep.defects.begin(), rep.defects.end(),
                                 [&](const BlockDefect& d) { return d.fraction() <= slack; });
  return rep;
}

// ---------------------------------------------------------------------------
// Re-deriving the complement-matching bound on a maximalized graph.

struct Claim41Report {
  int complement_matching = 0;
  long long bound = 0;
  std::size_t types = 0;
  std::string tau, sigma;
  // |M_0|, |M_1|, ..., |M_k|.
  std::vector<int> chain;
  // Per colour: distinct, isolated, same_side, split or joined.
  std::vector<std::string> steps;
  int max_deficit = 0;
  bool quarter_steps = true;
  bool final_sets_edge_free = true;
  bool final_within_deficit = true;
  bool within_bound = true;
  bool passed() const { return quarter_steps && final_sets_edge_free && final_within_deficit; }
};

inline Claim41Report derive_claim41_bound(const ColouredGraph& g1, const Ground& ground,
                                          const ReductionParams& p, GroundKind kind) {
  p.validate();
  if (g1.colours() != p.k) throw PreconditionError("claim41: graph colour count differs from k");
  Structure st = detect_structure(g1, ground, p.k0, p.mode);
  Claim41Report rep;
  rep.bound = complement_matching_bound(p, kind);
  rep.max_deficit = min_ground_degree_deficit(g1, ground);
  Matching m = max_matching(complement_within(g1, ground).edges);
  rep.complement_matching = m.size();
  rep.within_bound = rep.complement_matching <= rep.bound;
  auto census = type_census(st);
  rep.types = census.size();
  if (m.edges.empty()) {
    rep.chain = {0};
    return rep;
  }

  // Largest class of matching edges between one ordered pair of types.
  std::map<std::pair<TypeSignature, TypeSignature>, std::vector<Edge>> classes;
  for (auto [u, v] : m.edges) {
    TypeSignature a = type_of(st, u), b = type_of(st, v);
    if (b < a) {
      std::swap(a, b);
      std::swap(u, v);
    }
    classes[{a, b}].emplace_back(u, v);
  }
  auto best = classes.begin();
  for (auto it = classes.begin(); it != classes.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  const TypeSignature tau = best->first.first, sigma = best->first.second;
  rep.tau = to_string(tau);
  rep.sigma = to_string(sigma);
  std::vector<Edge> cur = best->second;
  rep.chain.push_back(static_cast<int>(cur.size()));

  for (int c = 0; c < p.k; ++c) {
    const std::size_t ci = static_cast<std::size_t>(c);
    const int cu = tau.components[ci], cw = sigma.components[ci];
    const Role ru = tau.roles[ci], rw = sigma.roles[ci];
    if (cu != cw) {
      rep.steps.push_back("distinct");
    } else if (cu < 0) {
      rep.steps.push_back("isolated");
    } else if (ru == rw && (ru == Role::L || ru == Role::R)) {
      rep.steps.push_back("same_side");
    } else if (ru == Role::T && rw == Role::T) {
      rep.steps.push_back("split");
      const ComponentStructure& comp = st.colours[ci].components[static_cast<std::size_t>(cu)];
      auto leaf_of = [&](Vertex v) {
        for (std::size_t i = 0; i < comp.leaves.size(); ++i)
          if (contains(comp.leaves[i], v)) return static_cast<int>(i);
        return -1;
      };
      std::vector<int> relevant;
      std::vector<std::pair<int, int>> ends;
      for (auto [x, y] : cur) {
        ends.emplace_back(leaf_of(x), leaf_of(y));
        relevant.push_back(ends.back().first);
        relevant.push_back(ends.back().second);
      }
      std::sort(relevant.begin(), relevant.end());
      relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());
      auto slot = [&](int leaf) {
        return static_cast<int>(std::lower_bound(relevant.begin(), relevant.end(), leaf) - relevant.begin());
      };
      const int t = static_cast<int>(relevant.size());
      auto kept = [&](std::uint64_t side_a) {
        int cnt = 0;
        for (auto [lx, ly] : ends)
          cnt += ((side_a >> slot(lx)) & 1) && !((side_a >> slot(ly)) & 1);
        return cnt;
      };
      std::uint64_t choice = 0;
      int value = kept(0);
      if (t <= 20) {
        for (std::uint64_t a = 1; a < (std::uint64_t{1} << t); ++a)
          if (int v = kept(a); v > value) {
            value = v;
            choice = a;
          }
      } else {
        for (bool improved = true; improved;) {
          improved = false;
          for (int i = 0; i < t && i < 64; ++i)
            if (int v = kept(choice ^ (std::uint64_t{1} << i)); v > value) {
              value = v;
              choice ^= std::uint64_t{1} << i;
              improved = true;
            }
        }
      }
      std::vector<Edge> next;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (((choice >> slot(ends[i].first)) & 1) && !((choice >> slot(ends[i].second)) & 1))
          next.push_back(cur[i]);
      if (4 * next.size() < cur.size()) rep.quarter_steps = false;
      cur = std::move(next);
    } else {
      // The two types would be fully joined in this colour, so no edge of
      // the complement could run between them.
      rep.steps.push_back("joined");
      rep.quarter_steps = false;
    }
    rep.chain.push_back(static_cast<int>(cur.size()));
  }
  for (auto [x, _] : cur)
    for (auto [__, y] : cur)
      if (x != y && g1.present(x, y)) rep.final_sets_edge_free = false;
  rep.final_within_deficit = static_cast<int>(cur.size()) <= rep.max_deficit || cur.empty();
  return rep;
}

}  // namespace cmatch
