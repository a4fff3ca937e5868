// Copyright 2026 The Authors.
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

#include <algorithm>
#include <random>
#include <set>

#include "scsc/graph.h"
#include "scsc/philox.h"
#include "test_util.h"

namespace scsc {
namespace {

TEST(PhiloxTest, KnownAnswerVectors) {
  EXPECT_EQ(Philox4x32({0, 0, 0, 0}, {0, 0}),
            (PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                       {0xffffffff, 0xffffffff}),
            (PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                       {0xa4093822, 0x299f31d0}),
            (PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(PhiloxTest, UniformRanges) {
  for (std::uint32_t i = 0; i < 10000; ++i) {
    const double h = UniformHalfOpen(7, Stream::kRank, i, 3);
    const double o = UniformOpen(7, Stream::kRank, i, 3);
    EXPECT_GE(h, 0.0);
    EXPECT_LT(h, 1.0);
    EXPECT_GT(o, 0.0);
    EXPECT_LT(o, 1.0);
  }
  EXPECT_NE(RandomBits(1, Stream::kRank, 0, 0), RandomBits(1, Stream::kNoise, 0, 0));
  EXPECT_NE(RandomBits(1, Stream::kRank, 0, 0), RandomBits(2, Stream::kRank, 0, 0));
}

TEST(LoadEdgeListTest, Basic) {
  const Graph g = LoadEdgeList("0 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.EdgeList(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
  for (double p : g.probabilities()) EXPECT_EQ(p, 0.0);
}

TEST(LoadEdgeListTest, RemapsInFirstAppearanceOrder) {
  const Graph g = LoadEdgeList("# c\n5 7");
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.EdgeList(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
  EXPECT_EQ(g.OriginalId(0), 5);
  EXPECT_EQ(g.OriginalId(1), 7);
}

TEST(LoadEdgeListTest, DuplicatesCollapse) {
  const Graph g = LoadEdgeList("0 1\n0 1\n");
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(LoadEdgeListTest, EmptyInput) {
  EXPECT_EQ(LoadEdgeList("").num_vertices(), 0u);
  EXPECT_EQ(LoadEdgeList("# only a comment\n\n").num_vertices(), 0u);
}

TEST(LoadEdgeListTest, ParseErrorCarriesLine) {
  try {
    LoadEdgeList("0 1\n# ok\n2 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(LoadEdgeList("0 1 2\n"), ParseError);
  EXPECT_THROW(LoadEdgeList("7\n"), ParseError);
  EXPECT_THROW(LoadEdgeList("1.5 2\n"), ParseError);
}

TEST(LoadEdgeListTest, UndirectedEmitsBothDirections) {
  const Graph g = LoadEdgeList("0 1\n", /*undirected=*/true);
  EXPECT_EQ(g.EdgeList(),
            (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}}));
}

TEST(LoadEdgeListTest, SerializeRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomGraph(rng, 12, 0.2);
    const Graph h = LoadEdgeList(SerializeEdgeList(g));
    std::set<std::pair<std::int64_t, std::int64_t>> a, b;
    for (auto [u, v] : g.EdgeList()) a.emplace(g.OriginalId(u), g.OriginalId(v));
    for (auto [u, v] : h.EdgeList()) b.emplace(h.OriginalId(u), h.OriginalId(v));
    EXPECT_EQ(a, b);
  }
}

TEST(GraphTest, DegreesMatchEdgeList) {
  std::mt19937_64 rng(5);
  const Graph g = testing::RandomGraph(rng, 30, 0.1);
  std::vector<std::uint32_t> in(30, 0), out(30, 0);
  for (auto [u, v] : g.EdgeList()) {
    ++out[u];
    ++in[v];
    EXPECT_NE(u, v);
  }
  for (Vertex v = 0; v < 30; ++v) {
    EXPECT_EQ(g.InDegree(v), in[v]);
    EXPECT_EQ(g.OutDegree(v), out[v]);
    EXPECT_EQ(g.InEdges(v).size(), in[v]);
    for (EdgeIndex e : g.InEdges(v)) EXPECT_EQ(g.Target(e), v);
  }
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    EXPECT_GE(e, g.EdgeBegin(g.Source(e)));
    EXPECT_LT(e, g.EdgeEnd(g.Source(e)));
  }
}

TEST(WeightedCascadeTest, InverseInDegree) {
  const Graph g = WeightedCascadeProbabilities(LoadEdgeList("0 1\n2 1\n1 3\n"), 0.5);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const double expected = g.Target(e) == 1 ? 0.25 : 0.5;
    EXPECT_EQ(g.Probability(e), expected);
  }
  const Graph h = WeightedCascadeProbabilities(LoadEdgeList("0 1\n"), 1.0);
  EXPECT_EQ(h.Probability(0), 1.0);
}

TEST(WeightedCascadeTest, EveryEdgeIsQOverInDegree) {
  std::mt19937_64 rng(9);
  const Graph g = WeightedCascadeProbabilities(testing::RandomGraph(rng, 40, 0.1), 0.8);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    EXPECT_EQ(g.Probability(e), 0.8 / g.InDegree(g.Target(e)));
    EXPECT_GE(g.Probability(e), 0.0);
    EXPECT_LE(g.Probability(e), 1.0);
  }
}

TEST(WeightedCascadeTest, RejectsBadQ) {
  const Graph g = LoadEdgeList("0 1\n");
  EXPECT_THROW(WeightedCascadeProbabilities(g, 0.0), std::invalid_argument);
  EXPECT_THROW(WeightedCascadeProbabilities(g, 1.5), std::invalid_argument);
}

TEST(RealizationTest, ForcedProbabilities) {
  std::mt19937_64 rng(1);
  const Graph g = testing::RandomGraph(rng, 20, 0.2);
  const RealizationSet all = SampleRealizations(g.WithUniformProbability(1.0), 5, 4);
  const RealizationSet none = SampleRealizations(g.WithUniformProbability(0.0), 5, 4);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(all.CountAlive(i), g.num_edges());
    EXPECT_EQ(none.CountAlive(i), 0u);
  }
}

TEST(RealizationTest, AliveFractionMatchesProbability) {
  // Binomial(10000 * m, 0.3): a 0.02 band is far outside the 99.9% interval.
  const Graph g = LoadEdgeList("0 1\n1 2\n2 0\n0 3\n").WithUniformProbability(0.3);
  const RealizationSet r = SampleRealizations(g, 10000, 11);
  std::size_t alive = 0;
  for (std::size_t i = 0; i < 10000; ++i) alive += r.CountAlive(i);
  const double fraction = static_cast<double>(alive) / (10000.0 * g.num_edges());
  EXPECT_NEAR(fraction, 0.3, 0.02);
}

TEST(RealizationTest, DeterministicAndPrefixStable) {
  std::mt19937_64 rng(2);
  const Graph g = testing::RandomGraph(rng, 25, 0.15).WithUniformProbability(0.4);
  const RealizationSet a = SampleRealizations(g, 100, 99);
  const RealizationSet b = SampleRealizations(g, 100, 99);
  EXPECT_TRUE(a == b);
  const RealizationSet c = SampleRealizations(g, 200, 99);
  for (std::size_t i = 0; i < 100; ++i) {
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      ASSERT_EQ(a.Alive(i, e), c.Alive(i, e));
    }
  }
  EXPECT_THROW(SampleRealizations(g, 0, 1), std::invalid_argument);
}

TEST(ErdosRenyiTest, Deterministic) {
  const Graph a = ErdosRenyiGraph(50, 0.1, 3);
  const Graph b = ErdosRenyiGraph(50, 0.1, 3);
  EXPECT_EQ(a.EdgeList(), b.EdgeList());
  EXPECT_EQ(a.num_vertices(), 50u);
}

}  // namespace
}  // namespace scsc
