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

#include <sstream>

#include "cmatch/graph.hpp"
#include "cmatch/io.hpp"
#include "cmatch/random.hpp"
#include "support.hpp"

namespace cmatch {
namespace {

TEST(BuildBlowup, LoopedVertexIsCompleteGraph) {
  std::vector<Edge> pat{{0, 0}};
  ColouredGraph g = build_blowup(BlowupSpec(1, pat, {5}));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edge_count(), 10);
}

TEST(BuildBlowup, SingleEdgeIsCompleteBipartite) {
  std::vector<Edge> pat{{0, 1}};
  ColouredGraph g = build_blowup(BlowupSpec(2, pat, {2, 3}));
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_FALSE(g.present(0, 1));
  EXPECT_FALSE(g.present(2, 3));
  EXPECT_TRUE(g.present(1, 4));
  ASSERT_EQ(g.parts().size(), 2u);
  EXPECT_EQ(g.part_of(1), 0);
  EXPECT_EQ(g.part_of(2), 1);
}

TEST(BuildBlowup, LoopPlusEdge) {
  std::vector<Edge> pat{{0, 0}, {0, 1}};
  ColouredGraph g = build_blowup(BlowupSpec(2, pat, {2, 2}));
  // One pair inside the looped part plus 2*2 cross pairs.
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_TRUE(g.present(0, 1));
  EXPECT_FALSE(g.present(2, 3));
}

TEST(BuildBlowup, EmptyPartsContributeNothing) {
  std::vector<Edge> pat{{0, 1}, {1, 2}};
  ColouredGraph g = build_blowup(BlowupSpec(3, pat, {0, 2, 3}));
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(g.parts()[0].size(), 0);
}

TEST(BuildBlowup, EdgeCountMatchesFormulaOnRandomSpecs) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int s = rng.uniform_int(1, 4);
    std::vector<Edge> pat;
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j)
        if (rng.bernoulli(0.5)) pat.emplace_back(i, j);
    std::vector<int> sizes;
    for (int i = 0; i < s; ++i) sizes.push_back(rng.uniform_int(0, 6));
    long expected = 0;
    for (auto [i, j] : pat)
      expected += i == j ? sizes[i] * (sizes[i] - 1) / 2 : sizes[i] * sizes[j];
    EXPECT_EQ(build_blowup(BlowupSpec(s, pat, sizes)).edge_count(), expected);
  }
}

TEST(BlowupSpec, RejectsNegativeSizesAndBadPattern) {
  std::vector<Edge> pat{{0, 1}};
  EXPECT_THROW(BlowupSpec(2, pat, {1, -1}), StructuralError);
  std::vector<Edge> bad{{0, 2}};
  EXPECT_THROW(BlowupSpec(2, bad, {1, 1}), StructuralError);
}

TEST(ComplementWithin, CompleteColouringHasEmptyComplement) {
  ColouredGraph g = monochromatic(complete_graph(5), 2, 0);
  EXPECT_EQ(complement_within(g, Ground::complete()).edges.size(), 0);
}

TEST(ComplementWithin, FiveCycleIsSelfComplementary) {
  ColouredGraph g = monochromatic(testing::cycle(5), 1, 0);
  Graph comp = complement_within(g, Ground::complete()).edges;
  EXPECT_EQ(comp.size(), 5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(comp.degree(v), 2);
  EXPECT_TRUE(is_connected(comp));
}

TEST(ComplementWithin, MissingCrossEdgeOfBipartiteGround) {
  std::vector<Edge> pat{{0, 1}};
  BlowupSpec spec(2, pat, {2, 3});
  ColouredGraph g = build_blowup(spec);
  g.set_mask(0, 2, 0);
  Graph comp = complement_within(g, Ground::blowup(spec)).edges;
  ASSERT_EQ(comp.size(), 1);
  EXPECT_TRUE(comp.adjacent(0, 2));
}

TEST(ComplementWithin, VertexCountMismatchIsStructuralError) {
  std::vector<Edge> pat{{0, 1}};
  BlowupSpec spec(2, pat, {2, 3});
  ColouredGraph g(4, 1);
  EXPECT_THROW(complement_within(g, Ground::blowup(spec)), StructuralError);
}

TEST(ComplementWithin, PartitionsGroundEdges) {
  Rng rng(11);
  std::vector<Edge> pat{{0, 0}, {0, 1}, {1, 2}};
  BlowupSpec spec(3, pat, {3, 2, 3});
  Graph host = Ground::blowup(spec).graph(spec.order());
  for (int trial = 0; trial < 50; ++trial) {
    ColouredGraph g(spec.order(), 2);
    for (auto [u, v] : host.edges())
      if (rng.bernoulli(0.6)) g.add_colour(u, v, static_cast<int>(rng.below(2)));
    Graph comp = complement_within(g, Ground::blowup(spec)).edges;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        EXPECT_EQ(host.adjacent(u, v), comp.adjacent(u, v) != g.present(u, v));
  }
}

TEST(InducedSubgraph, IdentityEmptyAndRestriction) {
  ColouredGraph g = monochromatic(complete_graph(4), 2, 1);
  g.set_mask(0, 1, colour_bit(0));
  EXPECT_EQ(induced_subgraph(g, {0, 1, 2, 3}), g);
  EXPECT_EQ(induced_subgraph(g, {}).order(), 0);
  ColouredGraph e = induced_subgraph(g, {0, 1});
  EXPECT_EQ(e.order(), 2);
  EXPECT_EQ(e.mask(0, 1), colour_bit(0));
}

TEST(InducedSubgraph, RestrictsParts) {
  std::vector<Edge> pat{{0, 1}};
  ColouredGraph g = build_blowup(BlowupSpec(2, pat, {2, 3}));
  ColouredGraph h = induced_subgraph(g, {1, 3, 4});
  ASSERT_EQ(h.parts().size(), 2u);
  EXPECT_EQ(h.parts()[0], (PartRange{0, 0}));
  EXPECT_EQ(h.parts()[1], (PartRange{1, 2}));
}

TEST(InducedSubgraph, IdempotentAndCommutesWithComplement) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform_int(2, 9);
    ColouredGraph g(n, 3);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.5)) g.add_colour(u, v, static_cast<int>(rng.below(3)));
    VertexSet keep;
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.6)) keep.push_back(v);
    ColouredGraph h = induced_subgraph(g, keep);
    VertexSet all(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    EXPECT_EQ(induced_subgraph(h, all), h);
    Graph lhs = complement_within(h, Ground::complete()).edges;
    Graph rhs = induced(complement_within(g, Ground::complete()).edges, keep);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(GroundDeficit, ZeroForGroundItself) {
  std::vector<Edge> pat{{0, 1}};
  BlowupSpec spec(2, pat, {2, 3});
  EXPECT_EQ(min_ground_degree_deficit(build_blowup(spec), Ground::blowup(spec)), 0);
}

TEST(GroundDeficit, CompleteMinusMatchingOnFourOfFive) {
  ColouredGraph g = monochromatic(complete_graph(5), 1, 0);
  g.set_mask(0, 1, 0);
  g.set_mask(2, 3, 0);
  EXPECT_EQ(min_ground_degree_deficit(g, Ground::complete()), 1);
}

TEST(GroundDeficit, BipartiteGroundMatchesDirectScan) {
  std::vector<Edge> pat{{0, 1}};
  BlowupSpec spec(2, pat, {2, 3});
  ColouredGraph g = build_blowup(spec);
  // Remove two edges at vertex 0 and one at vertex 1: vertex 0 loses 2.
  g.set_mask(0, 2, 0);
  g.set_mask(0, 3, 0);
  g.set_mask(1, 4, 0);
  int brute = 0;
  for (Vertex u = 0; u < 5; ++u) {
    int lost = 0;
    for (Vertex v = 0; v < 5; ++v)
      if (v != u && (u < 2) != (v < 2) && !g.present(u, v)) ++lost;
    brute = std::max(brute, lost);
  }
  EXPECT_EQ(brute, 2);
  EXPECT_EQ(min_ground_degree_deficit(g, Ground::blowup(spec)), brute);
}

TEST(GroundDeficit, EdgeOutsideGroundIsRejected) {
  std::vector<Edge> pat{{0, 1}};
  BlowupSpec spec(2, pat, {2, 3});
  ColouredGraph g = build_blowup(spec);
  g.add_colour(0, 1, 0);
  EXPECT_THROW(min_ground_degree_deficit(g, Ground::blowup(spec)), StructuralError);
}

TEST(ColouredGraph, RejectsLoopsAndForeignColours) {
  ColouredGraph g(3, 2);
  EXPECT_THROW(g.add_colour(1, 1, 0), StructuralError);
  EXPECT_THROW(g.add_colour(0, 1, 2), StructuralError);
  EXPECT_THROW(g.set_mask(0, 1, colour_bit(5)), StructuralError);
  EXPECT_THROW(ColouredGraph(3, 17), StructuralError);
}

TEST(GraphFile, WritesCanonicalForm) {
  ColouredGraph g(3, 3);
  g.set_mask(1, 2, colour_bit(0) | colour_bit(2));
  g.add_colour(0, 2, 1);
  g.set_parts({{0, 0}, {1, 2}});
  EXPECT_EQ(to_graph_string(g), "v 3 3\np 0 0 0\np 1 1 2\ne 0 2 2\ne 1 2 1,3\n");
}

TEST(GraphFile, ParsesCommentsAndBlankLines) {
  ColouredGraph g = parse_graph("# header\n\nv 3 2  # trailing\ne 0 1 2\n\ne 1 2 1,2\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.mask(0, 1), colour_bit(1));
  EXPECT_EQ(g.mask(1, 2), colour_bit(0) | colour_bit(1));
  EXPECT_FALSE(g.present(0, 2));
}

TEST(GraphFile, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("e 0 1 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2 1\ne 0 1 \n"), ParseError);
  EXPECT_THROW(parse_graph("v 2 1\ne 0 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2 1\ne 0 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2 1\ne 0 1 1\ne 1 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2 1\nx\n"), ParseError);
  EXPECT_THROW(parse_graph("v 3 1\np 0 0 0\np 1 2 2\n"), ParseError);
  EXPECT_THROW(parse_graph("v 3 1\np 0 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v two 1\n"), ParseError);
}

TEST(GraphFile, RandomGraphsRoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform_int(0, 12);
    int k = rng.uniform_int(1, 5);
    ColouredGraph g(n, k);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        g.set_mask(u, v, static_cast<ColourMask>(rng.below(palette(k) + 1u)));
    if (n >= 2 && rng.bernoulli(0.5)) {
      int cut = rng.uniform_int(0, n);
      g.set_parts({{0, cut - 1}, {cut, n - 1}});
    }
    EXPECT_EQ(parse_graph(to_graph_string(g)), g);
  }
}

}  // namespace
}  // namespace cmatch
