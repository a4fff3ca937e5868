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
// Exhaustive ground truth for small instances
//

#ifndef SCSC_BRUTEFORCE_H_
#define SCSC_BRUTEFORCE_H_

#include <cstddef>
#include <limits>
#include <vector>

#include "scsc/cost.h"
#include "scsc/oracle.h"

namespace scsc {

inline constexpr std::size_t kMaxCoverGround = 24;
inline constexpr std::size_t kMaxSubmodularGround = 12;
inline constexpr std::size_t kMaxEpsApproxGround = 16;
inline constexpr double kSubmodularTolerance = 1e-12;

struct CoverResult {
  bool feasible = false;
  std::vector<Vertex> set;  // ascending
  double cost = 0.0;
};

// argmin { c(X) : f(X) >= tau } over all subsets of the ground set. Ties go to
// the lexicographically smallest ascending set. feasible = false iff f(S) < tau.
CoverResult OptimalCover(const Oracle& f, const CostModel& cost, double tau);

struct SubmodularViolation {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  Vertex x;
  double gain_a;  // F(A + x) - F(A)
  double gain_b;  // F(B + x) - F(B)
};

// Every (A subset of B, x not in B) with gain_a < gain_b - 1e-12, up to limit.
std::vector<SubmodularViolation> CheckSubmodular(
    const Oracle& F, std::size_t limit = std::numeric_limits<std::size_t>::max());

struct EpsApproxResult {
  double max_abs_gap = 0.0;
  bool pass = true;
};

// max over all subsets X of |F(X) - f(X)|; pass iff <= eps.
EpsApproxResult CheckEpsApprox(const Oracle& F, const Oracle& f, double eps);

}  // namespace scsc

#endif  // SCSC_BRUTEFORCE_H_
