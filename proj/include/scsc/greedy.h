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

//
// Cost-effectiveness greedy for submodular cover
//

// greedy(F, c, tau):
//   A = {}
//   while F(A) < tau:
//     A += argmax_{x not in A} (F_tau(A + x) - F_tau(A)) / c({x})
//
// with F_tau = min(F, tau). F may be any value oracle, including approximate
// and non-submodular ones, so the marginal gains can be negative; the argmax
// is still taken over the raw ratios. Ties go to the smallest element id.

#ifndef SCSC_GREEDY_H_
#define SCSC_GREEDY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scsc/cost.h"
#include "scsc/oracle.h"

namespace scsc {

enum class GreedyStatus {
  kCovered,             // F(A) >= tau.
  kEarlyExit,           // A gain fell to the early-exit threshold.
  kExhaustedGroundSet,  // A = S and still F(S) < tau.
  kIterationLimit,      // Stopped by GreedyOptions::max_iterations.
};

const char* StatusName(GreedyStatus status);

struct GreedyIteration {
  Vertex element;
  double value_before;  // F_tau(A_{i-1})
  double value_after;   // F_tau(A_i)
  double gain;          // value_after - value_before
  double cost;          // c({element})
};

struct GreedyTrace {
  double tau = 0.0;
  std::vector<GreedyIteration> iterations;
  GreedyStatus status = GreedyStatus::kCovered;
  // Untruncated F(A) of the returned set.
  double final_value = 0.0;

  std::size_t size() const { return iterations.size(); }
  // A_i = {x_1, ..., x_i}; A_0 is empty.
  std::vector<Vertex> Prefix(std::size_t i) const;
  std::vector<Vertex> Solution() const { return Prefix(iterations.size()); }
};

struct GreedyResult {
  std::vector<Vertex> solution;
  GreedyTrace trace;
};

struct GreedyOptions {
  // Lazy (priority-queue) evaluation. Only sound when F is submodular, so the
  // oracle must declare it.
  bool lazy = false;
  // Stop, discarding the candidate, once F_tau(A_k) - F_tau(A_{k-1}) <= value.
  std::optional<double> early_exit_gain;
  std::optional<std::size_t> max_iterations;
};

GreedyResult Greedy(const Oracle& oracle, const CostModel& cost, double tau,
                    const GreedyOptions& options = {});

// Greedy that returns A_{k-1} at the first iteration k whose truncated gain is
// at most mu_star. If F is eps-approximate to a monotone submodular f then
// f(A) >= tau - n ((c_max / c_min) mu_star + 2 eps).
GreedyResult GreedyEarlyExit(const Oracle& oracle, const CostModel& cost,
                             double tau, double mu_star);

// Greedy against threshold tau - eps. When F is itself monotone submodular and
// eps-approximate to f, the solution keeps the submodular-cover ratio for the
// f instance and f(A) >= tau - 2 eps.
GreedyResult RunTranslated(const Oracle& oracle, const CostModel& cost,
                           double tau, double eps);

// iter,element_original_id,gain,cost,F_before,F_after
// original_ids maps dense ids to output ids; empty means identity.
std::string TraceToCsv(const GreedyTrace& trace,
                       std::span<const std::int64_t> original_ids = {});

}  // namespace scsc

#endif  // SCSC_GREEDY_H_
