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

#include "scsc/greedy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "scsc/format.h"

namespace scsc {

const char* StatusName(GreedyStatus status) {
  switch (status) {
    case GreedyStatus::kCovered:
      return "covered";
    case GreedyStatus::kEarlyExit:
      return "early_exit";
    case GreedyStatus::kExhaustedGroundSet:
      return "exhausted_ground_set";
    case GreedyStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

std::vector<Vertex> GreedyTrace::Prefix(std::size_t i) const {
  if (i > iterations.size()) throw std::out_of_range("prefix beyond trace");
  std::vector<Vertex> out;
  out.reserve(i);
  for (std::size_t j = 0; j < i; ++j) out.push_back(iterations[j].element);
  return out;
}

namespace {

struct Choice {
  Vertex element;
  double value;  // untruncated F(A + element)
};

// Plain scan: one extension query per remaining element.
class FullScan {
 public:
  FullScan(const Oracle& oracle, const CostModel& cost, double tau)
      : oracle_(oracle), cost_(cost), tau_(tau) {}

  Choice Select(std::span<const Vertex> chosen, const std::vector<char>& in_set,
                double before) {
    candidates_.clear();
    for (Vertex x = 0; x < in_set.size(); ++x) {
      if (!in_set[x]) candidates_.push_back(x);
    }
    const std::vector<double> values = oracle_.QueryExtensions(chosen, candidates_);
    const double before_t = std::min(before, tau_);
    double best_ratio = -std::numeric_limits<double>::infinity();
    Choice best{candidates_.front(), values.front()};
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      const double gain = std::min(values[c], tau_) - before_t;
      const double ratio = gain / cost_.Singleton(candidates_[c]);
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = {candidates_[c], values[c]};
      }
    }
    return best;
  }

 private:
  const Oracle& oracle_;
  const CostModel& cost_;
  double tau_;
  std::vector<Vertex> candidates_;
};

// Lazy evaluation: stale ratios upper-bound fresh ones under submodularity.
class LazyScan {
 public:
  LazyScan(const Oracle& oracle, const CostModel& cost, double tau)
      : oracle_(oracle), cost_(cost), tau_(tau) {}

  Choice Select(std::span<const Vertex> chosen, const std::vector<char>& in_set,
                double before) {
    ++round_;
    const double before_t = std::min(before, tau_);
    if (round_ == 1) {
      std::vector<Vertex> all;
      for (Vertex x = 0; x < in_set.size(); ++x) {
        if (!in_set[x]) all.push_back(x);
      }
      const std::vector<double> values = oracle_.QueryExtensions(chosen, all);
      for (std::size_t c = 0; c < all.size(); ++c) {
        heap_.push({Ratio(values[c], before_t, all[c]), all[c], values[c], round_});
      }
    }
    while (true) {
      Entry top = heap_.top();
      heap_.pop();
      if (top.round == round_) return {top.element, top.value};
      const Vertex x = top.element;
      const double value = oracle_.QueryExtensions(chosen, {&x, 1}).front();
      heap_.push({Ratio(value, before_t, x), x, value, round_});
    }
  }

 private:
  struct Entry {
    double ratio;
    Vertex element;
    double value;
    std::size_t round;
  };
  struct Order {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.ratio != b.ratio) return a.ratio < b.ratio;
      return a.element > b.element;
    }
  };

  double Ratio(double value, double before_t, Vertex x) const {
    return (std::min(value, tau_) - before_t) / cost_.Singleton(x);
  }

  const Oracle& oracle_;
  const CostModel& cost_;
  double tau_;
  std::size_t round_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, Order> heap_;
};

template <typename Scan>
GreedyResult Run(const Oracle& oracle, const CostModel& cost, double tau,
                 const GreedyOptions& options, Scan scan) {
  const std::size_t n = oracle.ground_set_size();
  GreedyResult result;
  GreedyTrace& trace = result.trace;
  trace.tau = tau;
  std::vector<char> in_set(n, 0);
  std::vector<Vertex>& chosen = result.solution;
  double current = oracle.Query(chosen);
  trace.status = GreedyStatus::kCovered;
  while (current < tau) {
    if (chosen.size() == n) {
      trace.status = GreedyStatus::kExhaustedGroundSet;
      break;
    }
    if (options.max_iterations && chosen.size() >= *options.max_iterations) {
      trace.status = GreedyStatus::kIterationLimit;
      break;
    }
    const Choice choice = scan.Select(chosen, in_set, current);
    const double before_t = std::min(current, tau);
    const double after_t = std::min(choice.value, tau);
    const double gain = after_t - before_t;
    if (options.early_exit_gain && gain <= *options.early_exit_gain) {
      trace.status = GreedyStatus::kEarlyExit;
      break;
    }
    trace.iterations.push_back(
        {choice.element, before_t, after_t, gain, cost.Singleton(choice.element)});
    chosen.push_back(choice.element);
    in_set[choice.element] = 1;
    current = choice.value;
  }
  trace.final_value = current;
  return result;
}

}  // namespace

GreedyResult Greedy(const Oracle& oracle, const CostModel& cost, double tau,
                    const GreedyOptions& options) {
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  if (cost.size() != oracle.ground_set_size()) {
    throw std::invalid_argument("cost model and oracle ground sets differ");
  }
  if (options.lazy) {
    if (!oracle.declares_submodular()) {
      throw std::invalid_argument("lazy greedy needs a submodular oracle");
    }
    return Run(oracle, cost, tau, options, LazyScan(oracle, cost, tau));
  }
  return Run(oracle, cost, tau, options, FullScan(oracle, cost, tau));
}

GreedyResult GreedyEarlyExit(const Oracle& oracle, const CostModel& cost,
                             double tau, double mu_star) {
  if (!(mu_star > 0.0)) throw std::invalid_argument("mu_star must be > 0");
  GreedyOptions options;
  options.early_exit_gain = mu_star;
  return Greedy(oracle, cost, tau, options);
}

GreedyResult RunTranslated(const Oracle& oracle, const CostModel& cost,
                           double tau, double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  if (!(tau > eps)) throw std::invalid_argument("tau must exceed eps");
  return Greedy(oracle, cost, tau - eps);
}

std::string TraceToCsv(const GreedyTrace& trace,
                       std::span<const std::int64_t> original_ids) {
  std::string out = "iter,element_original_id,gain,cost,F_before,F_after\n";
  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const GreedyIteration& it = trace.iterations[i];
    const std::int64_t id = original_ids.empty()
                                ? static_cast<std::int64_t>(it.element)
                                : original_ids[it.element];
    out += std::to_string(i + 1) + ',' + std::to_string(id) + ',' +
           FormatDouble(it.gain) + ',' + FormatDouble(it.cost) + ',' +
           FormatDouble(it.value_before) + ',' + FormatDouble(it.value_after) +
           '\n';
  }
  return out;
}

}  // namespace scsc
