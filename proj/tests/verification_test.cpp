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

#include "cmatch/verification.hpp"
#include "support.hpp"

namespace cmatch {
namespace {

constexpr int kRed = 0, kBlue = 1, kGreen = 2;

bool no_mono_cm(const ColouredGraph& g, int edges) {
  CMReport r = largest_mono_cm(g);
  for (int c = 0; c < g.colours(); ++c)
    if (r.best(c, CmMode::matching, Restrict::all) >= 2 * edges) return false;
  return true;
}

TEST(StructureC, GeneratorExamples) {
  ColouredGraph k5 = gen_structure_c(1, 1, 2, 3);
  EXPECT_EQ(k5.order(), 5);
  EXPECT_EQ(k5.support(), complete_graph(5));
  EXPECT_TRUE(no_mono_cm(k5, 2));

  ColouredGraph k1 = gen_structure_c(0, 0, 1, 3);
  EXPECT_EQ(k1.order(), 1);
  EXPECT_TRUE(find_structure_c(k1, 0).has_value());

  ColouredGraph k9 = gen_structure_c(2, 0, 5, 3);
  for (Vertex u = 4; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v) EXPECT_TRUE(k9.has_colour(u, v, kGreen));
  EXPECT_TRUE(no_mono_cm(k9, 3));
}

TEST(StructureC, GeneratorRejectsInfeasibleSizes) {
  EXPECT_THROW(gen_structure_c(1, 2, 1, 0), PreconditionError);
  EXPECT_THROW(gen_structure_c(1, 1, 1, 0), PreconditionError);
  EXPECT_THROW(gen_structure_c(-1, 0, 0, 0), PreconditionError);
}

TEST(StructureC, GeneratorCheckerRoundTrip) {
  for (int m = 1; m <= 3; ++m)
    for (int z = 0; z <= m; ++z)
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        ColouredGraph g = gen_structure_c(m, z, 2 * m + 1 - z, seed);
        EXPECT_TRUE(satisfies_structure_c(g, structure_c_layout(m, z, 2 * m + 1 - z)));
        EXPECT_TRUE(no_mono_cm(g, m + 1)) << m << " " << z << " " << seed;
        if (m <= 2) {
          EXPECT_TRUE(find_structure_c(g, m).has_value());
        }
      }
}

TEST(StructureC, CheckerHonoursRelabelling) {
  ColouredGraph g = testing::structure_c_k5();
  ColouredGraph swapped(5, 3);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) {
      int c = min_colour(g.mask(u, v));
      swapped.set_mask(u, v, colour_bit(c == kRed ? kGreen : c == kGreen ? kRed : kBlue));
    }
  StructureC relabelled = structure_c_layout(1, 1, 2);
  relabelled.red = kGreen;
  relabelled.green = kRed;
  EXPECT_TRUE(satisfies_structure_c(swapped, relabelled));
  EXPECT_FALSE(satisfies_structure_c(swapped, structure_c_layout(1, 1, 2)));
  auto s = find_structure_c(swapped, 1);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(satisfies_structure_c(swapped, *s));
}

TEST(StructureC, MonochromaticK5IsNotStructureC) {
  ColouredGraph g = monochromatic(complete_graph(5), 3, kRed);
  EXPECT_FALSE(no_mono_cm(g, 2));
  EXPECT_FALSE(find_structure_c(g, 1).has_value());
}

TEST(LemmaThreeColours, SampledRunIsDeterministic) {
  VerifyReport a = verify_lemma_three_colours(2, 40, 17, 1);
  VerifyReport b = verify_lemma_three_colours(2, 40, 17, 3);
  EXPECT_EQ(a.checked, 40u + 24u);
  EXPECT_EQ(a.failure_count, 0u);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.counts.at("structure_c"), 24u);
  EXPECT_EQ(a.mode, "sampled");
  EXPECT_THROW(verify_lemma_three_colours(2), PreconditionError);
}

TEST(Corollary, SampledStructureInstances) {
  VerifyReport r = verify_corollary_cm(2, 10, 5, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.counts.at("blue_cm_in_xw"), 24u);
  EXPECT_EQ(r.counts.at("mono_cm_m"), r.checked);
}

TEST(LemmaBip, ExhaustiveM1) {
  VerifyReport r = verify_lemma_bip(1);
  EXPECT_EQ(r.checked, 64u);
  EXPECT_EQ(r.space_size, 64);
  EXPECT_EQ(r.failure_count, 0u);
  EXPECT_EQ(r.counts.at("b1_mono_cm") + r.counts.at("b2_partition"), 64u);
}

TEST(LemmaBip, Examples) {
  ColouredGraph red(5, 2);
  for (Vertex a = 0; a < 2; ++a)
    for (Vertex b = 2; b < 5; ++b) red.set_mask(a, b, colour_bit(kRed));
  EXPECT_FALSE(no_mono_cm(red, 2));
  for (int m = 1; m <= 2; ++m)
    for (int z = 0; z <= 2 * m + 1; ++z) {
      ColouredGraph g = gen_structure_b2(m, z);
      EXPECT_TRUE(no_mono_cm(g, m + 1));
      auto s = find_structure_b2(g, m);
      ASSERT_TRUE(s.has_value());
      EXPECT_TRUE(satisfies_structure_b2(g, *s));
    }
  EXPECT_THROW(verify_lemma_bip(3), PreconditionError);
  EXPECT_TRUE(verify_lemma_bip(3, 200, 9).passed());
}

TEST(TwoMatchingCover, Examples) {
  TwoMatchingCoverResult c5 = verify_two_matching_cover(testing::cycle(5));
  EXPECT_EQ(c5.d.size(), 5u);
  EXPECT_TRUE(c5.d_prime.empty());
  EXPECT_TRUE(c5.universal());
  EXPECT_EQ(c5.shapes, 1u);

  TwoMatchingCoverResult claw = verify_two_matching_cover(testing::star(3));
  EXPECT_EQ(claw.d_prime, (VertexSet{1, 2, 3}));
  EXPECT_EQ(claw.neighbourhood, (VertexSet{0}));
  EXPECT_EQ(claw.shapes, 3u);
  EXPECT_TRUE(claw.universal());

  TwoMatchingCoverResult c6 = verify_two_matching_cover(testing::cycle(6));
  EXPECT_TRUE(c6.d.empty());
  EXPECT_TRUE(c6.existential());
  EXPECT_THROW(verify_two_matching_cover(Graph(13)), PreconditionError);
}

TEST(TwoMatchingCover, RandomGraphs) {
  VerifyReport r = verify_two_matching_cover_random(60, 3, 9);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 60u);
}

TEST(RandomVerifiers, PassAndAreDeterministic) {
  VerifyReport ge1 = verify_ge_random(40, 8, 9, 1), ge2 = verify_ge_random(40, 8, 9, 4);
  EXPECT_TRUE(ge1.passed());
  EXPECT_EQ(ge1.counts, ge2.counts);
  EXPECT_TRUE(verify_extensions_random(CmMode::matching, 30, 2, 8).passed());
  EXPECT_TRUE(verify_extensions_random(CmMode::two_matching, 30, 2, 8).passed());
  VerifyReport crit = verify_critical_random(60, 4, 14);
  EXPECT_TRUE(crit.passed());
  EXPECT_EQ(crit.checked, 60u);
}

TEST(Stability, ExactStructureHasNoDefect) {
  ColouredGraph g = gen_structure_c_pattern(2, 1, 3, 5);
  StabilityReport r = verify_stability_structure(g, 2, Rational(1, 4), Rational(0));
  EXPECT_EQ(r.search, "exhaustive");
  EXPECT_EQ(r.total_wrong, 0);
  EXPECT_TRUE(r.within_slack);
}

TEST(Stability, RecolouredEdgeCountsOnce) {
  ColouredGraph g = gen_structure_c_pattern(2, 2, 2, 5);
  StructureC layout = structure_c_layout(2, 2, 2);
  g.set_mask(0, 4, colour_bit(kBlue));
  auto d = stability_defects(g, layout, FourthBlock::yz);
  EXPECT_EQ(d[0].block, "XZ");
  EXPECT_EQ(d[0].wrong, 1);
  EXPECT_EQ(d[0].fraction(), Rational(1, 4));
  // The recoloured pair joins two blue blocks into a cm(4); a larger eps
  // keeps the precondition.
  EXPECT_THROW(verify_stability_structure(g, 2, Rational(1, 4), Rational(1, 4)), PreconditionError);
  StabilityReport r = verify_stability_structure(g, 2, Rational(3, 2), Rational(1, 4));
  EXPECT_LE(r.total_wrong, 1);
}

TEST(Stability, LiteralFourthBlockReading) {
  ColouredGraph g = gen_structure_c_pattern(2, 1, 3, 5);
  StabilityReport r = verify_stability_structure(g, 2, Rational(1, 4), Rational(0), FourthBlock::yw);
  EXPECT_GT(r.total_wrong, 0);
}

TEST(Stability, Preconditions) {
  EXPECT_THROW(verify_stability_structure(monochromatic(complete_graph(8), 3, kRed), 2,
                                          Rational(1, 4), Rational(0)),
               PreconditionError);
  EXPECT_THROW(verify_stability_structure(gen_structure_c_pattern(2, 1, 3, 5), 3, Rational(1, 4),
                                          Rational(0)),
               PreconditionError);
}

ReductionParams claim_params(int k, int n, Rational alpha) {
  ReductionParams p;
  p.k = k;
  p.k0 = k;
  p.alphas.assign(static_cast<std::size_t>(k), alpha);
  p.beta = 1;
  p.eps = Rational(1, 2);
  p.n = n;
  p.targets = {1};
  return p;
}

TEST(Claim41, EmptyComplementIsTrivial) {
  auto p = claim_params(3, 5, Rational(4, 5));
  std::vector<int> t = p.thresholds();
  ColouredGraph g1 = maximalize(testing::structure_c_k5(), Ground::complete(), t, 3, CmMode::matching);
  Claim41Report r = derive_claim41_bound(g1, Ground::complete(), p, GroundKind::complete);
  EXPECT_EQ(r.complement_matching, 0);
  EXPECT_EQ(r.chain, (std::vector<int>{0}));
  EXPECT_TRUE(r.passed());
}

TEST(Claim41, FilterOnSparseMaximalizedColourings) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 12;
    auto p = claim_params(2, n, Rational(2, 3));
    std::vector<int> t = p.thresholds();
    ColouredGraph g = testing::random_colouring_avoiding(complete_graph(n), 2, t, 2,
                                                         CmMode::matching, 0.9, rng);
    ColouredGraph g1 = maximalize(g, Ground::complete(), t, 2, CmMode::matching);
    Claim41Report r = derive_claim41_bound(g1, Ground::complete(), p, GroundKind::complete);
    EXPECT_GT(r.complement_matching, 0);
    ASSERT_EQ(r.chain.size(), 3u);
    EXPECT_EQ(r.steps.size(), 2u);
    for (std::size_t i = 1; i < r.chain.size(); ++i) {
      EXPECT_LE(r.chain[i], r.chain[i - 1]);
      EXPECT_GE(4 * r.chain[i], r.chain[i - 1]);
      if (r.steps[i - 1] != "split") {
        EXPECT_EQ(r.chain[i], r.chain[i - 1]);
      }
    }
    EXPECT_TRUE(r.passed()) << "trial " << trial;
  }
}

}  // namespace
}  // namespace cmatch
