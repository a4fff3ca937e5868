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
// Monotone submodular cost models
//

#ifndef SCSC_COST_H_
#define SCSC_COST_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scsc/graph.h"

namespace scsc {

class CostModel {
 public:
  virtual ~CostModel() = default;

  virtual std::size_t size() const = 0;
  // c({x}) > 0.
  virtual double Singleton(Vertex x) const = 0;
  // c(X); 0 iff X is empty. Independent of element order.
  virtual double Eval(std::span<const Vertex> set) const = 0;
  // Known curvature, or nullopt when it has to be computed or supplied.
  virtual std::optional<double> declared_curvature() const = 0;

  double MinSingleton() const;
  double MaxSingleton() const;
};

using CostPtr = std::shared_ptr<const CostModel>;

// c(X) = sum of per-element costs; curvature 1.
class ModularCost : public CostModel {
 public:
  explicit ModularCost(std::vector<double> costs);

  std::size_t size() const override { return costs_.size(); }
  double Singleton(Vertex x) const override { return costs_.at(x); }
  double Eval(std::span<const Vertex> set) const override;
  std::optional<double> declared_curvature() const override { return 1.0; }

  std::span<const double> costs() const { return costs_; }

 private:
  std::vector<double> costs_;
};

// c(X) = (sum of per-element costs)^p with p in (0, 1].
class ConcaveCardinalityCost : public CostModel {
 public:
  ConcaveCardinalityCost(std::vector<double> costs, double exponent);

  std::size_t size() const override { return costs_.size(); }
  double Singleton(Vertex x) const override;
  double Eval(std::span<const Vertex> set) const override;
  std::optional<double> declared_curvature() const override;

  double exponent() const { return exponent_; }

 private:
  std::vector<double> costs_;
  double exponent_;
};

CostPtr MakeModularCost(std::vector<double> costs);
CostPtr MakeConcaveCardinalityCost(std::vector<double> costs, double exponent);

// n draws from Normal(mean, sd); non-positive draws are redrawn. Draw j of
// element x uses the counter (x, j), so costs are reproducible per element.
std::vector<double> SampleNormalCosts(std::size_t n, double mean, double sd,
                                      std::uint64_t seed);

// One positive value per line; blank lines and '#' comments skipped.
std::vector<double> ParseCosts(std::string_view text);
std::vector<double> LoadCostsFile(const std::string& path);

// max over nonempty X subset of S of sum_x c({x}) / c(X). |S| <= 20.
double CurvatureBruteForce(const CostModel& cost, std::span<const Vertex> ground);

inline constexpr std::size_t kMaxCurvatureGround = 20;

}  // namespace scsc

#endif  // SCSC_COST_H_
