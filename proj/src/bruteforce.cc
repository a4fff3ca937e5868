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


#include "scsc/bruteforce.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace scsc {

namespace {

std::vector<Vertex> MaskToSet(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) out.push_back(v);
  }
  return out;
}

std::vector<double> AllValues(const Oracle& F) {
  const std::size_t n = F.ground_set_size();
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = F.Query(MaskToSet(mask));
  }
  return values;
}

}  // namespace

CoverResult OptimalCover(const Oracle& f, const CostModel& cost, double tau) {
  const std::size_t n = f.ground_set_size();
  if (n > kMaxCoverGround) throw std::invalid_argument("ground set too large");
  if (cost.size() != n) throw std::invalid_argument("cost size mismatch");
  CoverResult best;
  std::vector<char> member(n, 0);
  std::vector<Vertex> set;
  const std::uint64_t total = std::uint64_t{1} << n;
  // Gray-code walk: step i toggles the lowest set bit of i.
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      const int bit = std::countr_zero(i);
      member[bit] ^= 1;
    }
    set.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (member[v]) set.push_back(v);
    }
    const double c = cost.Eval(set);
    if (best.feasible) {
      if (c > best.cost) continue;
      if (c == best.cost && !(set < best.set)) continue;
    }
    if (f.Query(set) >= tau) {
      best.feasible = true;
      best.set = set;
      best.cost = c;
    }
  }
  return best;
}

std::vector<SubmodularViolation> CheckSubmodular(const Oracle& F,
                                                 std::size_t limit) {
  const std::size_t n = F.ground_set_size();
  if (n > kMaxSubmodularGround) throw std::invalid_argument("ground set too large");
  const std::vector<double> values = AllValues(F);
  const std::uint32_t full = static_cast<std::uint32_t>(values.size() - 1);
  std::vector<SubmodularViolation> out;
  for (std::uint32_t b = 0; b <= full; ++b) {
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      for (Vertex x = 0; x < n; ++x) {
        const std::uint32_t bit = std::uint32_t{1} << x;
        if (b & bit) continue;
        const double gain_a = values[a | bit] - values[a];
        const double gain_b = values[b | bit] - values[b];
        if (gain_a < gain_b - kSubmodularTolerance) {
          if (out.size() >= limit) return out;
          out.push_back({MaskToSet(a), MaskToSet(b), x, gain_a, gain_b});
        }
      }
      if (a == 0) break;
    }
  }
  return out;
}

EpsApproxResult CheckEpsApprox(const Oracle& F, const Oracle& f, double eps) {
  const std::size_t n = F.ground_set_size();
  if (f.ground_set_size() != n) throw std::invalid_argument("ground sets differ");
  if (n > kMaxEpsApproxGround) throw std::invalid_argument("ground set too large");
  EpsApproxResult result;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const std::vector<Vertex> set = MaskToSet(mask);
    result.max_abs_gap =
        std::max(result.max_abs_gap, std::abs(F.Query(set) - f.Query(set)));
  }
  result.pass = result.max_abs_gap <= eps;
  return result;
}

}  // namespace scsc
