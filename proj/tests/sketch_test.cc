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
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "scsc/bruteforce.h"
#include "scsc/sketch.h"
#include "test_util.h"

namespace scsc {
namespace {

constexpr Vertex kX = 0, kY = 1, kZ = 2;

std::vector<double> Of(const ReachSketch& s, Vertex u) {
  return {s.Of(u).begin(), s.Of(u).end()};
}

TEST(TriangleFixtureTest, SketchesMatchHandListing) {
  testing::TriangleFixture fx;
  const ReachSketch s = BuildSketches(fx.graph, fx.realizations, fx.ranks, 5);
  // X_x = {z2, x2, z1, y1, x1}, X_y = {z1, y3, y2, y1, x1},
  // X_z = {z2, x2, z1, z3, y1}.
  EXPECT_EQ(Of(s, kX), (std::vector<double>{0.05, 0.10, 0.20, 0.80, 0.81}));
  EXPECT_EQ(Of(s, kY), (std::vector<double>{0.20, 0.35, 0.70, 0.80, 0.81}));
  EXPECT_EQ(Of(s, kZ), (std::vector<double>{0.05, 0.10, 0.20, 0.25, 0.80}));
  EXPECT_TRUE(BuildSketchesNaive(fx.graph, fx.realizations, fx.ranks, 5) == s);
}

TEST(TriangleFixtureTest, EstimatorValues) {
  testing::TriangleFixture fx;
  const ReachSketch s = BuildSketches(fx.graph, fx.realizations, fx.ranks, 5);
  const Vertex x[] = {kX};
  const Vertex xyz[] = {kX, kY, kZ};
  EXPECT_NEAR(SketchEstimate(s, x), 4.0 / (3.0 * 0.81), 1e-12);
  EXPECT_NEAR(SketchEstimate(s, x), 1.6461, 1e-4);
  EXPECT_NEAR(SketchEstimate(s, xyz), 4.0 / (3.0 * 0.35), 1e-12);
  EXPECT_NEAR(SketchEstimate(s, xyz), 3.8095, 1e-4);
}

TEST(TriangleFixtureTest, MarginalGainsGrowWithTheBase) {
  testing::TriangleFixture fx;
  auto s = std::make_shared<const ReachSketch>(
      BuildSketches(fx.graph, fx.realizations, fx.ranks, 5));
  const SketchOracle F(s);
  const Vertex x[] = {kX}, xz[] = {kX, kZ}, xy[] = {kX, kY}, xyz[] = {kX, kY, kZ};
  const double small = F.Query(xz) - F.Query(x);
  const double large = F.Query(xyz) - F.Query(xy);
  // t = 0.80 vs 0.81 and t = 0.35 vs 0.70.
  EXPECT_NEAR(small, 4.0 / 2.4 - 4.0 / 2.43, 1e-9);
  EXPECT_NEAR(large, 4.0 / 1.05 - 4.0 / 2.1, 1e-9);
  EXPECT_NEAR(small, 0.0206, 5e-5);
  EXPECT_NEAR(large, 1.9048, 5e-5);
  EXPECT_LT(small, large);
  const auto violations = CheckSubmodular(F);
  const bool found = std::any_of(violations.begin(), violations.end(), [](const auto& v) {
    return v.a == std::vector<Vertex>{kX} &&
           v.b == std::vector<Vertex>{kX, kY} && v.x == kZ;
  });
  EXPECT_TRUE(found);
}

TEST(SketchTest, EdgelessSingleInstance) {
  const Graph g = Graph::FromEdges(5, {});
  const RealizationSet r = SampleRealizations(g, 1, 3);
  const RankAssignment ranks(5, 1, 8);
  const ReachSketch s = BuildSketches(g, r, ranks, 3);
  for (Vertex u = 0; u < 5; ++u) {
    EXPECT_EQ(Of(s, u), std::vector<double>{ranks.Rank(u, 0)});
  }
}

TEST(SketchTest, LargeKKeepsEveryReachablePair) {
  std::mt19937_64 rng(4);
  const Graph g = testing::RandomGraph(rng, 8, 0.2).WithUniformProbability(0.6);
  const RealizationSet r = SampleRealizations(g, 5, 2);
  const RankAssignment ranks(8, 5, 2);
  const ReachSketch s = BuildSketches(g, r, ranks, 40);
  for (Vertex u = 0; u < 8; ++u) {
    EXPECT_EQ(Of(s, u), testing::ReferenceSketch(g, r, ranks, 1000, u));
  }
}

TEST(SketchTest, BuildersAgreeWithReference) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 49;
    const std::size_t N = 1 + rng() % 20;
    const std::size_t k = 1 + rng() % 8;
    const Graph g = testing::RandomGraph(rng, n, 3.0 / n).WithUniformProbability(0.5);
    const RealizationSet r = SampleRealizations(g, N, trial);
    const RankAssignment ranks(n, N, trial + 1000);
    const ReachSketch pruned = BuildSketches(g, r, ranks, k);
    const ReachSketch naive = BuildSketchesNaive(g, r, ranks, k);
    ASSERT_TRUE(pruned == naive) << "trial " << trial;
    ASSERT_EQ(SerializeSketch(pruned), SerializeSketch(naive));
    for (Vertex u = 0; u < n; u += 7) {
      ASSERT_EQ(Of(pruned, u), testing::ReferenceSketch(g, r, ranks, k, u));
    }
  }
}

TEST(SketchTest, EstimateMatchesDefinition) {
  std::mt19937_64 rng(8);
  const Graph g = testing::RandomGraph(rng, 30, 0.08).WithUniformProbability(0.5);
  const RealizationSet r = SampleRealizations(g, 10, 1);
  const RankAssignment ranks(30, 10, 1);
  const ReachSketch s = BuildSketches(g, r, ranks, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> set;
    for (Vertex v = 0; v < 30; ++v) {
      if (rng() % 6 == 0) set.push_back(v);
    }
    EXPECT_DOUBLE_EQ(SketchEstimate(s, set), testing::ReferenceEstimate(s, set));
  }
  EXPECT_EQ(SketchEstimate(s, {}), 0.0);
}

TEST(SketchTest, SmallUnionBranch) {
  // |U| = 2 < k = 5 with N = 2 gives 1.
  const ReachSketch s(5, 2, 0, {{0.1}, {0.2}});
  const Vertex both[] = {0, 1};
  EXPECT_EQ(SketchEstimate(s, both), 1.0);
  // |U| = k takes the (k - 1) / (N t) branch.
  const ReachSketch full(2, 1, 0, {{0.25}, {0.5}});
  EXPECT_EQ(SketchEstimate(full, both), 1.0 / 0.5);
}

TEST(SketchTest, ExactWhenKExceedsReachablePairs) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = std::make_shared<const Graph>(
        testing::RandomGraph(rng, 10, 0.2).WithUniformProbability(0.5));
    auto r = std::make_shared<const RealizationSet>(SampleRealizations(*g, 50, trial));
    const ReachSketch s = BuildSketches(*g, *r, RankAssignment(10, 50, trial), 501);
    ExactReachabilityOracle f(g, r);
    for (std::uint32_t mask = 1; mask < 1024; mask += 37) {
      std::vector<Vertex> set;
      for (Vertex v = 0; v < 10; ++v) {
        if (mask >> v & 1) set.push_back(v);
      }
      ASSERT_EQ(SketchEstimate(s, set), f.Query(set));
    }
  }
}

TEST(SketchOracleTest, ExtensionsMatchQuery) {
  std::mt19937_64 rng(12);
  const Graph g = testing::RandomGraph(rng, 40, 0.06).WithUniformProbability(0.6);
  const RealizationSet r = SampleRealizations(g, 15, 3);
  auto s = std::make_shared<const ReachSketch>(
      BuildSketches(g, r, RankAssignment(40, 15, 3), 7));
  const SketchOracle F(s, 0.5);
  EXPECT_EQ(F.eps_abs(), 0.5);
  const std::vector<Vertex> base = {3, 17, 29};
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < 40; ++v) {
    if (v != 3 && v != 17 && v != 29) candidates.push_back(v);
  }
  const std::vector<double> ext = F.QueryExtensions(base, candidates);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::vector<Vertex> set = base;
    set.push_back(candidates[c]);
    EXPECT_EQ(ext[c], F.Query(set));
  }
}

TEST(RankAssignmentTest, DeterministicOpenUnitInterval) {
  const RankAssignment a(100, 50, 5), b(100, 50, 5), c(100, 50, 6);
  int differ = 0;
  for (Vertex v = 0; v < 100; ++v) {
    for (std::size_t i = 0; i < 50; ++i) {
      EXPECT_GT(a.Rank(v, i), 0.0);
      EXPECT_LT(a.Rank(v, i), 1.0);
      EXPECT_EQ(a.Rank(v, i), b.Rank(v, i));
      differ += a.Rank(v, i) != c.Rank(v, i);
    }
  }
  EXPECT_GT(differ, 4990);
}

TEST(RankAssignmentTest, KolmogorovSmirnov) {
  // 10^6 draws; the 1% critical value is 1.628 / sqrt(m).
  const std::size_t n = 1000, N = 1000;
  const RankAssignment ranks(n, N, 2024);
  std::vector<double> draws;
  draws.reserve(n * N);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < N; ++i) draws.push_back(ranks.Rank(v, i));
  }
  std::sort(draws.begin(), draws.end());
  const double m = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t j = 0; j < draws.size(); ++j) {
    d = std::max(d, std::max((j + 1) / m - draws[j], draws[j] - j / m));
  }
  EXPECT_LT(d, 1.628 / std::sqrt(m));
}

TEST(SketchSizeTest, Formula) {
  EXPECT_EQ(SketchSizeFor(0.999, 3, 3.0), 4u);
  EXPECT_EQ(SketchSizeFor(0.5, 4039, 3.0), 100u);
  const double ratio = static_cast<double>(SketchSizeFor(0.05, 1000, 3.0)) /
                       static_cast<double>(SketchSizeFor(0.1, 1000, 3.0));
  EXPECT_NEAR(ratio, 4.0, 0.01);
  EXPECT_THROW(SketchSizeFor(0.5, 100, 2.0), std::invalid_argument);
  EXPECT_THROW(SketchSizeFor(1.0, 100, 3.0), std::invalid_argument);
  EXPECT_THROW(SketchSizeFor(0.0, 100, 3.0), std::invalid_argument);
  EXPECT_THROW(SketchSizeFor(0.5, 1, 3.0), std::invalid_argument);
}

class SketchFileTest : public ::testing::Test {
 protected:
  ReachSketch Sample() {
    std::mt19937_64 rng(14);
    const Graph g = testing::RandomGraph(rng, 25, 0.1).WithUniformProbability(0.5);
    const RealizationSet r = SampleRealizations(g, 9, 4);
    return BuildSketches(g, r, RankAssignment(25, 9, 4), 6);
  }
};

TEST_F(SketchFileTest, RoundTrip) {
  const ReachSketch s = Sample();
  const std::string bytes = SerializeSketch(s);
  EXPECT_EQ(bytes.substr(0, 8), "SCSCSK01");
  const ReachSketch back = DeserializeSketch(bytes);
  EXPECT_TRUE(back == s);
  EXPECT_EQ(SerializeSketch(back), bytes);
  const std::string path =
      (std::filesystem::temp_directory_path() / "scsc_sketch_test.scsk").string();
  SaveSketch(s, path);
  EXPECT_TRUE(LoadSketch(path) == s);
  std::filesystem::remove(path);
}

TEST_F(SketchFileTest, LayoutIsLittleEndian) {
  const ReachSketch s(3, 2, 0x0102030405060708ull, {{0.5}, {}});
  const std::string b = SerializeSketch(s);
  ASSERT_EQ(b.size(), 8u + 4 + 4 + 4 + 8 + (4 + 8) + 4);
  EXPECT_EQ(static_cast<unsigned char>(b[8]), 2);   // n
  EXPECT_EQ(static_cast<unsigned char>(b[12]), 3);  // k
  EXPECT_EQ(static_cast<unsigned char>(b[16]), 2);  // N
  EXPECT_EQ(static_cast<unsigned char>(b[20]), 0x08);
  EXPECT_EQ(static_cast<unsigned char>(b[27]), 0x01);
  EXPECT_EQ(static_cast<unsigned char>(b[28]), 1);  // len of vertex 0
}

TEST_F(SketchFileTest, RejectsCorruptInput) {
  const std::string bytes = SerializeSketch(Sample());
  std::string bad_magic = bytes;
  bad_magic[3] = 'X';
  EXPECT_THROW(DeserializeSketch(bad_magic), SketchFormatError);
  EXPECT_THROW(DeserializeSketch(bytes.substr(0, bytes.size() - 3)), SketchFormatError);
  EXPECT_THROW(DeserializeSketch(bytes + "x"), SketchFormatError);
  EXPECT_THROW(DeserializeSketch(""), SketchFormatError);

  const ReachSketch two(3, 1, 0, {{0.25, 0.5}});
  std::string swapped = SerializeSketch(two);
  // Swap the two ranks so they descend.
  std::swap_ranges(swapped.begin() + 32, swapped.begin() + 40, swapped.begin() + 40);
  EXPECT_THROW(DeserializeSketch(swapped), SketchFormatError);

  std::string over_k = SerializeSketch(two);
  over_k[12] = 1;  // k = 1 < len = 2
  EXPECT_THROW(DeserializeSketch(over_k), SketchFormatError);
}

}  // namespace
}  // namespace scsc
