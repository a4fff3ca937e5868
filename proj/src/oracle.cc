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

#include "scsc/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scsc/philox.h"

namespace scsc {

std::vector<double> Oracle::QueryExtensions(
    std::span<const Vertex> base, std::span<const Vertex> candidates) const {
  std::vector<Vertex> set(base.begin(), base.end());
  set.push_back(0);
  std::vector<double> out;
  out.reserve(candidates.size());
  for (Vertex x : candidates) {
    set.back() = x;
    out.push_back(Query(set));
  }
  return out;
}

namespace {

// Visited marks that are cleared by generation bump instead of memset.
class VisitMarks {
 public:
  explicit VisitMarks(std::size_t n) : marks_(n, 0) {}
  void NextGeneration() { ++generation_; }
  bool Test(Vertex v) const { return marks_[v] == generation_; }
  void Set(Vertex v) { marks_[v] = generation_; }

 private:
  std::vector<std::uint32_t> marks_;
  std::uint32_t generation_ = 1;
};

// Forward BFS in one instance from `sources`, skipping vertices already
// marked in `blocked` (when non-null). Newly reached vertices are marked in
// `marks` and appended to `queue`. Returns the number newly reached.
std::size_t ForwardReach(const Graph& g, const RealizationSet& r,
                         std::size_t instance, std::span<const Vertex> sources,
                         const VisitMarks* blocked, VisitMarks& marks,
                         std::vector<Vertex>& queue) {
  const std::size_t start = queue.size();
  for (Vertex s : sources) {
    if ((blocked != nullptr && blocked->Test(s)) || marks.Test(s)) continue;
    marks.Set(s);
    queue.push_back(s);
  }
  const auto words = r.InstanceWords(instance);
  for (std::size_t head = start; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (EdgeIndex e = g.EdgeBegin(u); e < g.EdgeEnd(u); ++e) {
      if (!((words[e >> 6] >> (e & 63)) & 1u)) continue;
      const Vertex v = g.Target(e);
      if (marks.Test(v) || (blocked != nullptr && blocked->Test(v))) continue;
      marks.Set(v);
      queue.push_back(v);
    }
  }
  return queue.size() - start;
}

void CheckVertices(std::span<const Vertex> set, std::size_t n) {
  for (Vertex v : set) {
    if (v >= n) throw std::out_of_range("vertex id outside ground set");
  }
}

}  // namespace

ExactReachabilityOracle::ExactReachabilityOracle(
    std::shared_ptr<const Graph> graph,
    std::shared_ptr<const RealizationSet> realizations, bool enable_cache)
    : graph_(std::move(graph)),
      realizations_(std::move(realizations)),
      cache_enabled_(enable_cache) {
  if (realizations_->num_edges() != graph_->num_edges()) {
    throw std::invalid_argument("realizations do not match graph");
  }
  if (realizations_->num_instances() == 0) {
    throw std::invalid_argument("need at least one realization");
  }
}

std::size_t ExactReachabilityOracle::ReachableInInstance(
    std::size_t instance, std::span<const Vertex> set) const {
  CheckVertices(set, graph_->num_vertices());
  VisitMarks marks(graph_->num_vertices());
  std::vector<Vertex> queue;
  return ForwardReach(*graph_, *realizations_, instance, set, nullptr, marks,
                      queue);
}

std::uint64_t ExactReachabilityOracle::TotalReachable(
    std::span<const Vertex> set) const {
  CheckVertices(set, graph_->num_vertices());
  if (set.empty()) return 0;
  VisitMarks marks(graph_->num_vertices());
  std::vector<Vertex> queue;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < realizations_->num_instances(); ++i) {
    marks.NextGeneration();
    queue.clear();
    total += ForwardReach(*graph_, *realizations_, i, set, nullptr, marks, queue);
  }
  return total;
}

double ExactReachabilityOracle::Query(std::span<const Vertex> set) const {
  if (!cache_enabled_) {
    return static_cast<double>(TotalReachable(set)) /
           static_cast<double>(realizations_->num_instances());
  }
  std::vector<Vertex> key(set.begin(), set.end());
  std::sort(key.begin(), key.end());
  const std::uint64_t h = HashSequence(key);
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (auto it = cache_.find(h); it != cache_.end()) {
      for (const auto& [stored, value] : it->second) {
        if (stored == key) return value;
      }
    }
  }
  const double value = static_cast<double>(TotalReachable(key)) /
                       static_cast<double>(realizations_->num_instances());
  std::lock_guard<std::mutex> lock(cache_mu_);
  cache_[h].emplace_back(std::move(key), value);
  return value;
}

std::vector<double> ExactReachabilityOracle::QueryExtensions(
    std::span<const Vertex> base, std::span<const Vertex> candidates) const {
  const std::size_t n = graph_->num_vertices();
  CheckVertices(base, n);
  CheckVertices(candidates, n);
  std::vector<std::uint64_t> totals(candidates.size(), 0);
  VisitMarks base_marks(n);
  VisitMarks extra_marks(n);
  std::vector<Vertex> base_queue;
  std::vector<Vertex> extra_queue;
  for (std::size_t i = 0; i < realizations_->num_instances(); ++i) {
    base_marks.NextGeneration();
    base_queue.clear();
    const std::size_t base_count = ForwardReach(
        *graph_, *realizations_, i, base, nullptr, base_marks, base_queue);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Vertex x = candidates[c];
      std::size_t extra = 0;
      if (!base_marks.Test(x)) {
        extra_marks.NextGeneration();
        extra_queue.clear();
        extra = ForwardReach(*graph_, *realizations_, i, {&x, 1}, &base_marks,
                             extra_marks, extra_queue);
      }
      totals[c] += base_count + extra;
    }
  }
  std::vector<double> out(candidates.size());
  const double num = static_cast<double>(realizations_->num_instances());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    out[c] = static_cast<double>(totals[c]) / num;
  }
  return out;
}

OraclePtr MakeExactReachabilityOracle(Graph graph, RealizationSet realizations) {
  return std::make_shared<ExactReachabilityOracle>(
      std::make_shared<const Graph>(std::move(graph)),
      std::make_shared<const RealizationSet>(std::move(realizations)));
}

TruncatedOracle::TruncatedOracle(OraclePtr base, double tau)
    : base_(std::move(base)), tau_(tau) {
  if (!base_) throw std::invalid_argument("null oracle");
}

double TruncatedOracle::Query(std::span<const Vertex> set) const {
  return std::min(base_->Query(set), tau_);
}

std::vector<double> TruncatedOracle::QueryExtensions(
    std::span<const Vertex> base, std::span<const Vertex> candidates) const {
  std::vector<double> out = base_->QueryExtensions(base, candidates);
  for (double& v : out) v = std::min(v, tau_);
  return out;
}

OraclePtr Truncate(OraclePtr oracle, double tau) {
  return std::make_shared<TruncatedOracle>(std::move(oracle), tau);
}

NoisyOracle::NoisyOracle(OraclePtr exact, double eps, std::uint64_t seed,
                         NoiseMode mode)
    : exact_(std::move(exact)), eps_(eps), seed_(seed), mode_(mode) {
  if (!exact_) throw std::invalid_argument("null oracle");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
}

double NoisyOracle::Query(std::span<const Vertex> set) const {
  const double f = exact_->Query(set);
  if (eps_ == 0.0) return f;
  double eta = 0.0;
  if (mode_ == NoiseMode::kUniform) {
    std::vector<Vertex> key(set.begin(), set.end());
    std::sort(key.begin(), key.end());
    const std::uint64_t h = HashSequence(key);
    const double u = UniformHalfOpen(seed_, Stream::kNoise,
                                     static_cast<std::uint32_t>(h),
                                     static_cast<std::uint32_t>(h >> 32));
    eta = eps_ * (2.0 * u - 1.0);
  } else {
    eta = set.size() % 2 == 0 ? eps_ : -eps_;
  }
  double v = std::max(0.0, f + eta);
  while (v > f && (v - eps_ > f || v - f > eps_)) v = std::nextafter(v, f);
  while (v < f && (v + eps_ < f || f - v > eps_)) v = std::nextafter(v, f);
  return v;
}

ModularOracle::ModularOracle(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= 0.0)) throw std::invalid_argument("modular values must be >= 0");
  }
}

double ModularOracle::Query(std::span<const Vertex> set) const {
  CheckVertices(set, values_.size());
  std::vector<Vertex> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (Vertex v : sorted) total += values_[v];
  return total;
}

WeightedCoverageOracle::WeightedCoverageOracle(
    std::vector<std::vector<std::uint32_t>> covers,
    std::vector<double> item_weights)
    : covers_(std::move(covers)), weights_(std::move(item_weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("item weights must be >= 0");
  }
  for (const auto& c : covers_) {
    for (std::uint32_t item : c) {
      if (item >= weights_.size()) throw std::invalid_argument("item out of range");
    }
  }
}

double WeightedCoverageOracle::Query(std::span<const Vertex> set) const {
  CheckVertices(set, covers_.size());
  std::vector<char> covered(weights_.size(), 0);
  for (Vertex v : set) {
    for (std::uint32_t item : covers_[v]) covered[item] = 1;
  }
  double total = 0.0;
  for (std::size_t item = 0; item < weights_.size(); ++item) {
    if (covered[item]) total += weights_[item];
  }
  return total;
}

double WeightedCoverageOracle::TotalWeight() const {
  std::vector<Vertex> all(covers_.size());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return Query(all);
}

FunctionOracle::FunctionOracle(std::size_t n, Fn fn, double eps_abs,
                               bool submodular)
    : n_(n), fn_(std::move(fn)), eps_(eps_abs), submodular_(submodular) {
  if (!fn_) throw std::invalid_argument("empty function");
}

double RelToAbsEps(double eps_rel, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  if (!(eps_rel >= 0.0)) throw std::invalid_argument("eps_rel must be >= 0");
  return eps_rel * tau;
}

}  // namespace scsc
