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


#include "verify.h"

#include <algorithm>
#include <memory>
#include <vector>

#include "scsc/bruteforce.h"
#include "scsc/cost.h"
#include "scsc/graph.h"
#include "scsc/greedy.h"
#include "scsc/guarantees.h"
#include "scsc/oracle.h"
#include "scsc/philox.h"
#include "scsc/sketch.h"

namespace scsc {

namespace {

class Draws {
 public:
  Draws(std::uint64_t seed, std::uint32_t trial) : seed_(seed), trial_(trial) {}
  double Uniform() { return UniformHalfOpen(seed_, Stream::kNoise, trial_, next_++); }
  std::size_t Below(std::size_t bound) {
    return static_cast<std::size_t>(Uniform() * static_cast<double>(bound));
  }

 private:
  std::uint64_t seed_;
  std::uint32_t trial_;
  std::uint32_t next_ = 0;
};

std::shared_ptr<WeightedCoverageOracle> RandomCoverage(Draws& d, std::size_t n) {
  const std::size_t items = 4 + d.Below(12);
  std::vector<double> weights(items);
  for (double& w : weights) w = 1.0 + static_cast<double>(d.Below(5));
  std::vector<std::vector<std::uint32_t>> covers(n);
  for (auto& c : covers) {
    for (std::uint32_t j = 0; j < items; ++j) {
      if (d.Uniform() < 0.3) c.push_back(j);
    }
  }
  return std::make_shared<WeightedCoverageOracle>(std::move(covers),
                                                  std::move(weights));
}

bool Report(std::ostream& out, const char* name, bool ok, std::size_t count) {
  out << (ok ? "PASS " : "FAIL ") << name << " (" << count << " cases)\n";
  return ok;
}

bool TriangleFixtureCheck(std::ostream& out) {
  std::vector<std::pair<Vertex, Vertex>> edges = {{0, 1}, {0, 2}, {1, 0},
                                                  {1, 2}, {2, 0}, {2, 1}};
  const Graph g = Graph::FromEdges(3, edges);
  std::vector<std::vector<bool>> masks(3, std::vector<bool>(g.num_edges(), false));
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    masks[0][e] = true;
    const Vertex s = g.Source(e);
    const Vertex t = g.Target(e);
    masks[1][e] = (s == 0 && t == 2) || (s == 2 && t == 0);
  }
  const RealizationSet r = RealizationSet::FromMasks(g, masks);
  const RankAssignment ranks = RankAssignment::FromTable(
      3, 3, {0.81, 0.10, 0.95, 0.80, 0.70, 0.35, 0.20, 0.05, 0.25});
  auto sketch = std::make_shared<const ReachSketch>(BuildSketches(g, r, ranks, 5));
  const SketchOracle F(sketch);
  const bool ok = !CheckSubmodular(F).empty() &&
                  BuildSketchesNaive(g, r, ranks, 5) == *sketch;
  return Report(out, "sketch oracle non-submodular on the three-vertex fixture",
                ok, 1);
}

}  // namespace

bool RunVerifySuite(std::size_t trials, std::uint64_t seed, std::ostream& out) {
  bool all = TriangleFixtureCheck(out);
  std::size_t greedy_bad = 0, cert_bad = 0, feas_bad = 0, sub_bad = 0, certs = 0;
  for (std::uint32_t t = 0; t < trials; ++t) {
    Draws d(seed, t);
    const std::size_t n = 3 + d.Below(8);
    auto f = RandomCoverage(d, n);
    std::vector<double> costs(n);
    for (double& c : costs) c = 0.5 + d.Uniform();
    const CostPtr cost = (t % 2 == 0) ? MakeModularCost(costs)
                                      : MakeConcaveCardinalityCost(costs, 0.5);
    std::vector<Vertex> all_ids(n);
    for (Vertex x = 0; x < n; ++x) all_ids[x] = x;
    const double rho = cost->declared_curvature().value_or(
        CurvatureBruteForce(*cost, all_ids));
    const double f_all = f->Query(all_ids);
    if (f_all <= 0.0) continue;
    const double tau = f_all * (0.3 + 0.7 * d.Uniform());

    const GreedyResult run = Greedy(*f, *cost, tau);
    const CoverResult opt = OptimalCover(*f, *cost, tau);
    const double c_a = cost->Eval(run.solution);
    if (run.trace.status != GreedyStatus::kCovered || c_a < opt.cost) ++greedy_bad;
    if (!run.trace.iterations.empty()) {
      const TraceStats s = TraceStatsExact(*f, run.trace);
      const RatioCertificate r1 = RatioThm1(0.0, rho, cost->MinSingleton(),
                                            cost->MaxSingleton(), s.mu, s.alpha,
                                            *s.beta);
      const RatioCertificate r2 =
          BestGamma(0.0, rho, cost->MinSingleton(), cost->MaxSingleton(), s.mu,
                    s.alpha, n, DefaultGammaGrid());
      for (const RatioCertificate* r : {&r1, &r2}) {
        if (!r->valid) continue;
        ++certs;
        if (c_a > *r->value * opt.cost) ++cert_bad;
      }
    }

    const double eps = 0.1 * d.Uniform();
    const NoisyOracle noisy(f, eps, seed + t, t % 2 ? NoiseMode::kUniform
                                                    : NoiseMode::kAdversarialAlternating);
    const GreedyResult noisy_run = Greedy(noisy, *cost, tau);
    if (noisy_run.trace.status == GreedyStatus::kCovered &&
        f->Query(noisy_run.solution) < tau - eps) {
      ++feas_bad;
    }
    if (n <= 8 && !CheckSubmodular(*f).empty()) ++sub_bad;
  }
  all &= Report(out, "greedy covers and never beats the optimum", greedy_bad == 0, trials);
  all &= Report(out, "valid certificates bound c(A) / c(A*)", cert_bad == 0, certs);
  all &= Report(out, "covered noisy runs satisfy f(A) >= tau - eps", feas_bad == 0, trials);
  all &= Report(out, "weighted coverage passes the submodularity scan", sub_bad == 0, trials);
  return all;
}

}  // namespace scsc
