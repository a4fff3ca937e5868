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


// Fixtures and independent reference computations shared by the tests.

#ifndef SCSC_TESTS_TEST_UTIL_H_
#define SCSC_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "scsc/graph.h"
#include "scsc/oracle.h"
#include "scsc/sketch.h"

namespace scsc::testing {

// Three vertices x=0, y=1, z=2 and three instances: the full triangle, the
// single x-z edge, and no edges. Ranks follow
// z2 < x2 < z1 < z3 < y3 < y2 < y1 < x1 < x3.
struct TriangleFixture {
  Graph graph;
  RealizationSet realizations;
  RankAssignment ranks{3, 3, 0};

  TriangleFixture() {
    const std::vector<std::pair<Vertex, Vertex>> edges = {
        {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    graph = Graph::FromEdges(3, edges);
    std::vector<std::vector<bool>> masks(3,
                                         std::vector<bool>(graph.num_edges()));
    for (EdgeIndex e = 0; e < graph.num_edges(); ++e) {
      const Vertex s = graph.Source(e);
      const Vertex t = graph.Target(e);
      masks[0][e] = true;
      masks[1][e] = (s == 0 && t == 2) || (s == 2 && t == 0);
    }
    realizations = RealizationSet::FromMasks(graph, masks);
    ranks = RankAssignment::FromTable(
        3, 3, {0.81, 0.10, 0.95, 0.80, 0.70, 0.35, 0.20, 0.05, 0.25});
  }
};

// Vertices reachable from set in instance i, by a plain DFS over alive edges.
inline std::vector<Vertex> ReferenceReach(const Graph& g, const RealizationSet& r,
                                          std::size_t i,
                                          const std::vector<Vertex>& set) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack(set.begin(), set.end());
  for (Vertex v : set) seen[v] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e = g.EdgeBegin(u); e < g.EdgeEnd(u); ++e) {
      const Vertex w = g.Target(e);
      if (r.Alive(i, e) && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

inline double ReferenceAverageReach(const Graph& g, const RealizationSet& r,
                                    const std::vector<Vertex>& set) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < r.num_instances(); ++i) {
    total += ReferenceReach(g, r, i, set).size();
  }
  return static_cast<double>(total) / static_cast<double>(r.num_instances());
}

// The k smallest ranks of (v, i) with v reachable from u in instance i.
inline std::vector<double> ReferenceSketch(const Graph& g, const RealizationSet& r,
                                           const RankAssignment& ranks,
                                           std::size_t k, Vertex u) {
  std::vector<double> all;
  for (std::size_t i = 0; i < r.num_instances(); ++i) {
    for (Vertex v : ReferenceReach(g, r, i, {u})) all.push_back(ranks.Rank(v, i));
  }
  std::sort(all.begin(), all.end());
  if (all.size() > k) all.resize(k);
  return all;
}

// Bottom-k estimate computed straight from the definition.
inline double ReferenceEstimate(const ReachSketch& s, const std::vector<Vertex>& set) {
  if (set.empty()) return 0.0;
  std::set<double> u;
  for (Vertex v : set) u.insert(s.Of(v).begin(), s.Of(v).end());
  const double N = static_cast<double>(s.num_instances());
  if (u.size() < s.k()) return static_cast<double>(u.size()) / N;
  auto it = u.begin();
  std::advance(it, s.k() - 1);
  return (static_cast<double>(s.k()) - 1.0) / (N * *it);
}

inline Graph RandomGraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

// Random weighted coverage function with integer weights, so sums are exact.
inline std::shared_ptr<WeightedCoverageOracle> RandomCoverage(std::mt19937_64& rng,
                                                              std::size_t n,
                                                              std::size_t items) {
  std::uniform_int_distribution<int> weight(1, 5);
  std::bernoulli_distribution coin(0.3);
  std::vector<double> weights(items);
  for (double& w : weights) w = weight(rng);
  std::vector<std::vector<std::uint32_t>> covers(n);
  for (auto& c : covers) {
    for (std::uint32_t j = 0; j < items; ++j) {
      if (coin(rng)) c.push_back(j);
    }
    if (c.empty()) c.push_back(static_cast<std::uint32_t>(rng() % items));
  }
  return std::make_shared<WeightedCoverageOracle>(std::move(covers),
                                                  std::move(weights));
}

inline std::vector<Vertex> AllOf(std::size_t n) {
  std::vector<Vertex> out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = v;
  return out;
}

}  // namespace scsc::testing

#endif  // SCSC_TESTS_TEST_UTIL_H_
