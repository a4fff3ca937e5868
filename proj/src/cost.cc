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

#include "scsc/cost.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "scsc/philox.h"

namespace scsc {

double CostModel::MinSingleton() const {
  if (size() == 0) throw std::logic_error("empty cost model");
  double best = Singleton(0);
  for (Vertex x = 1; x < size(); ++x) best = std::min(best, Singleton(x));
  return best;
}

double CostModel::MaxSingleton() const {
  if (size() == 0) throw std::logic_error("empty cost model");
  double best = Singleton(0);
  for (Vertex x = 1; x < size(); ++x) best = std::max(best, Singleton(x));
  return best;
}

namespace {

void CheckPositive(const std::vector<double>& costs) {
  for (double c : costs) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("costs must be positive and finite");
    }
  }
}

// Sum in ascending element order so that Eval ignores input order.
double SortedSum(std::span<const double> costs, std::span<const Vertex> set) {
  std::vector<Vertex> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (Vertex v : sorted) total += costs[v];
  return total;
}

void CheckSet(std::span<const Vertex> set, std::size_t n) {
  for (Vertex v : set) {
    if (v >= n) throw std::out_of_range("element outside cost ground set");
  }
}

}  // namespace

ModularCost::ModularCost(std::vector<double> costs) : costs_(std::move(costs)) {
  CheckPositive(costs_);
}

double ModularCost::Eval(std::span<const Vertex> set) const {
  CheckSet(set, costs_.size());
  return SortedSum(costs_, set);
}

ConcaveCardinalityCost::ConcaveCardinalityCost(std::vector<double> costs,
                                               double exponent)
    : costs_(std::move(costs)), exponent_(exponent) {
  CheckPositive(costs_);
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw std::invalid_argument("exponent must be in (0, 1]");
  }
}

double ConcaveCardinalityCost::Singleton(Vertex x) const {
  return std::pow(costs_.at(x), exponent_);
}

double ConcaveCardinalityCost::Eval(std::span<const Vertex> set) const {
  CheckSet(set, costs_.size());
  if (set.empty()) return 0.0;
  return std::pow(SortedSum(costs_, set), exponent_);
}

std::optional<double> ConcaveCardinalityCost::declared_curvature() const {
  if (exponent_ == 1.0) return 1.0;
  return std::nullopt;
}

CostPtr MakeModularCost(std::vector<double> costs) {
  return std::make_shared<ModularCost>(std::move(costs));
}

CostPtr MakeConcaveCardinalityCost(std::vector<double> costs, double exponent) {
  return std::make_shared<ConcaveCardinalityCost>(std::move(costs), exponent);
}

std::vector<double> SampleNormalCosts(std::size_t n, double mean, double sd,
                                      std::uint64_t seed) {
  if (!(mean > 0.0)) throw std::invalid_argument("mean must be > 0");
  if (!(sd >= 0.0)) throw std::invalid_argument("sd must be >= 0");
  std::vector<double> costs(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto id = static_cast<std::uint32_t>(x);
    for (std::uint32_t draw = 0;; ++draw) {
      // Box-Muller on a keyed pair of uniforms.
      const double u1 = UniformOpen(seed, Stream::kCost, id, 2 * draw);
      const double u2 = UniformHalfOpen(seed, Stream::kCost, id, 2 * draw + 1);
      const double z = std::sqrt(-2.0 * std::log(u1)) *
                       std::cos(2.0 * std::numbers::pi * u2);
      const double c = mean + sd * z;
      if (c > 0.0) {
        costs[x] = c;
        break;
      }
    }
  }
  return costs;
}

std::vector<double> ParseCosts(std::string_view text) {
  std::vector<double> costs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view token = line.substr(first, last - first + 1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "not a number: '" + std::string(token) + "'");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ParseError(line_no, "cost must be positive");
    }
    costs.push_back(value);
  }
  return costs;
}

std::vector<double> LoadCostsFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCosts(buffer.str());
}

double CurvatureBruteForce(const CostModel& cost, std::span<const Vertex> ground) {
  if (ground.size() > kMaxCurvatureGround) {
    throw std::invalid_argument("curvature brute force limited to 20 elements");
  }
  if (ground.empty()) throw std::invalid_argument("empty ground set");
  // Ascending order makes the singleton sum associate exactly like Eval, so a
  // modular model yields exactly 1.
  std::vector<Vertex> sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  ground = sorted;
  double best = 0.0;
  std::vector<Vertex> subset;
  const std::uint32_t limit = std::uint32_t{1} << ground.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    subset.clear();
    double singles = 0.0;
    for (std::size_t j = 0; j < ground.size(); ++j) {
      if (mask & (std::uint32_t{1} << j)) {
        subset.push_back(ground[j]);
        singles += cost.Singleton(ground[j]);
      }
    }
    best = std::max(best, singles / cost.Eval(subset));
  }
  return best;
}

}  // namespace scsc
