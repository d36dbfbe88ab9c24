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

#include <gtest/gtest.h>

#include "cmatch/gallai_edmonds.hpp"
#include "cmatch/oracle.hpp"
#include "cmatch/random.hpp"
#include "support.hpp"

namespace cmatch {
namespace {

using testing::cycle;
using testing::disjoint_union;
using testing::path;
using testing::star;

TEST(GEDecompose, PathOnThreeVertices) {
  GEDecomposition ge = ge_decompose(path(3));
  EXPECT_EQ(ge.A, (VertexSet{1}));
  EXPECT_TRUE(ge.C.empty());
  EXPECT_EQ(ge.D, (VertexSet{0, 2}));
  EXPECT_EQ(ge.d_components.size(), 2u);
}

TEST(GEDecompose, CompleteGraphOnFour) {
  GEDecomposition ge = ge_decompose(complete_graph(4));
  EXPECT_TRUE(ge.A.empty());
  EXPECT_EQ(ge.C, (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(ge.D.empty());
}

TEST(GEDecompose, FiveCycleIsAllD) {
  GEDecomposition ge = ge_decompose(cycle(5));
  EXPECT_TRUE(ge.A.empty());
  EXPECT_TRUE(ge.C.empty());
  EXPECT_EQ(ge.D.size(), 5u);
  EXPECT_EQ(ge.d_components.size(), 1u);
}

// D must be exactly the vertices some maximum matching misses.
TEST(GEDecompose, DMatchesEnumeratedMaximumMatchings) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng.uniform_int(1, 10), rng.unit() * 0.6, rng);
    std::vector<char> missed(static_cast<std::size_t>(g.order()), 0);
    oracle::for_each_maximum_matching(g, [&](const Matching& m) {
      std::vector<char> cov(missed.size(), 0);
      for (auto [u, v] : m.edges) cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(v)] = 1;
      for (std::size_t v = 0; v < cov.size(); ++v)
        if (!cov[v]) missed[v] = 1;
    });
    VertexSet d;
    for (Vertex v = 0; v < g.order(); ++v)
      if (missed[static_cast<std::size_t>(v)]) d.push_back(v);
    GEDecomposition ge = ge_decompose(g);
    ASSERT_EQ(ge.D, d);
    for (Vertex c : ge.C)
      for (Vertex w : g.neighbours(c)) EXPECT_FALSE(contains(ge.D, w));
    for (Vertex a : ge.A) {
      bool touches = false;
      for (Vertex w : g.neighbours(a)) touches |= contains(ge.D, w);
      EXPECT_TRUE(touches);
    }
  }
}

TEST(VerifyGETheorem, Examples) {
  GETheoremReport p3 = verify_ge_theorem(path(3));
  EXPECT_TRUE(p3.passed());
  EXPECT_EQ(p3.matchings_checked, 2);
  EXPECT_TRUE(verify_ge_theorem(cycle(5)).passed());
  EXPECT_THROW(verify_ge_theorem(Graph(13)), PreconditionError);
}

TEST(VerifyGETheorem, RandomGraphs) {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng.uniform_int(1, 10), rng.unit() * 0.5, rng);
    EXPECT_TRUE(verify_ge_theorem(g).passed()) << "trial " << trial;
  }
}

TEST(MaximalStarExtension, EmptyGraph) {
  StarBlowup s = maximal_star_extension(Graph(5), 1);
  EXPECT_TRUE(s.head.empty());
  EXPECT_EQ(s.leaves.size(), 5u);
}

TEST(MaximalStarExtension, StarIsItsOwnExtension) {
  StarBlowup s = maximal_star_extension(star(5), 2);
  EXPECT_EQ(s.head, (VertexSet{0}));
  EXPECT_EQ(s.leaves.size(), 5u);
  EXPECT_EQ(star_graph(6, s), star(5));
}

TEST(MaximalStarExtension, TwoTriangles) {
  Graph g = disjoint_union(complete_graph(3), complete_graph(3));
  StarBlowup s = maximal_star_extension(g, 3);
  EXPECT_TRUE(s.head.empty());
  EXPECT_EQ(s.leaves, (std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_EQ(star_graph(6, s), g);
}

TEST(MaximalStarExtension, EdgePlusIsolatedVertexGrowsToTriangle) {
  // The decomposition's own H is K2 + K1, which is not maximal.
  Graph g = testing::from_edges(3, {{1, 2}});
  StarBlowup s = maximal_star_extension(g, 2);
  Graph h = star_graph(3, s);
  EXPECT_EQ(h, complete_graph(3));
  EXPECT_EQ(matching_number(h), 1);
}

TEST(MaximalStarExtension, PreconditionViolation) {
  EXPECT_THROW(maximal_star_extension(complete_graph(4), 2), PreconditionError);
}

void expect_extension_properties(const Graph& g, const StarBlowup& s,
                                 int (*invariant)(const Graph&)) {
  const int n = g.order();
  ASSERT_TRUE(star_partitions(n, s));
  Graph h = star_graph(n, s);
  EXPECT_TRUE(is_subgraph(g, h));
  EXPECT_EQ(invariant(h), invariant(g));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (h.adjacent(u, v)) continue;
      Graph bigger = h;
      bigger.add_edge(u, v);
      EXPECT_GT(invariant(bigger), invariant(h));
    }
}

TEST(MaximalStarExtension, RandomGraphsSatisfyContract) {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng.uniform_int(1, 9), rng.unit() * 0.5, rng);
    int nu = oracle::brute_matching_oracle(g);
    StarBlowup s = maximal_star_extension(g, nu + 1);
    expect_extension_properties(g, s, &oracle::brute_matching_oracle);
  }
}

TEST(MaximalTwoMatchingExtension, StarAndEmpty) {
  StarBlowup s = maximal_two_matching_extension(star(5), 3);
  EXPECT_EQ(s.head, (VertexSet{0}));
  EXPECT_EQ(s.leaves.size(), 5u);
  StarBlowup e = maximal_two_matching_extension(Graph(3), 1);
  EXPECT_TRUE(e.head.empty());
  EXPECT_EQ(e.leaves.size(), 3u);
}

TEST(MaximalTwoMatchingExtension, TriangleWithIsolatedVertex) {
  Graph g = disjoint_union(complete_graph(3), Graph(1));
  // Oracle: a pendant at the triangle would give order 4.
  EXPECT_EQ(oracle::brute_two_matching_oracle(g), 3);
  StarBlowup s = maximal_two_matching_extension(g, 4);
  EXPECT_TRUE(s.head.empty());
  EXPECT_EQ(s.leaves, (std::vector<VertexSet>{{0, 1, 2}, {3}}));
}

TEST(MaximalTwoMatchingExtension, RandomGraphsSatisfyContract) {
  Rng rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng.uniform_int(1, 9), rng.unit() * 0.5, rng);
    int order = oracle::brute_two_matching_oracle(g);
    StarBlowup s = maximal_two_matching_extension(g, order + 1);
    expect_extension_properties(g, s, &oracle::brute_two_matching_oracle);
    int non_singleton = 0;
    for (const auto& leaf : s.leaves) non_singleton += leaf.size() > 1;
    EXPECT_LE(non_singleton, 1);
  }
}

TEST(MaximalTwoMatchingExtension, PreconditionViolation) {
  EXPECT_THROW(maximal_two_matching_extension(cycle(5), 5), PreconditionError);
}

TEST(CriticalVertex, StarCentre) { EXPECT_EQ(critical_vertex(star(5), 1), 0); }

TEST(CriticalVertex, BridgeEndpoint) {
  // Triangle 0-1-2, bridge 2-3, pendant path 3-4-5-6? Use triangle + bridge +
  // a two-leaf star at 3: nu = 2, n = 6.
  Graph g = testing::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {3, 5}});
  ASSERT_EQ(matching_number(g), 2);
  Vertex u = critical_vertex(g, 2);
  EXPECT_EQ(u, 3);
  // Deletion scan: only removing vertex 3 lowers nu (removing 2 leaves the
  // edge 0-1 and the star at 3).
  for (Vertex v = 0; v < 6; ++v)
    EXPECT_EQ(matching_number(without_vertex(g, v)) < 2, v == 3) << v;
}

TEST(CriticalVertex, TwoTrianglesJoinedByBridgeViolatesPrecondition) {
  Graph g = disjoint_union(complete_graph(3), complete_graph(3));
  g.add_edge(2, 3);
  EXPECT_EQ(matching_number(g), 3);
  EXPECT_THROW(critical_vertex(g, 2), PreconditionError);
}

TEST(CriticalVertex, StarBlowupHead) {
  // Head 0, singleton leaves 1..5, triangle blob {6,7,8}.
  StarBlowup s{{0}, {{1}, {2}, {3}, {4}, {5}, {6, 7, 8}}};
  Graph g = star_graph(9, s);
  ASSERT_EQ(matching_number(g), 2);
  EXPECT_EQ(critical_vertex(g, 2), 0);
  for (Vertex v = 1; v < 9; ++v) EXPECT_EQ(matching_number(without_vertex(g, v)), 2);
}

TEST(CriticalVertex, Preconditions) {
  EXPECT_THROW(critical_vertex(Graph(6), 1), PreconditionError);
  EXPECT_THROW(critical_vertex(star(2), 1), PreconditionError);
}

}  // namespace
}  // namespace cmatch
