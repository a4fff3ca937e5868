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
// Value oracles
//

// An oracle answers F(X) for subsets X of the ground set {0, ..., n-1}.
// Queries are pure: the same set always yields the same value, independent of
// element order. All oracles are immutable after construction and safe for
// concurrent Query calls.

#ifndef SCSC_ORACLE_H_
#define SCSC_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "scsc/graph.h"

namespace scsc {

class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual std::size_t ground_set_size() const = 0;
  virtual double Query(std::span<const Vertex> set) const = 0;

  // Values F(base + {x}) for every candidate x, where no candidate is in base.
  // Must agree bit-for-bit with Query on the same sets; the default simply
  // calls Query.
  virtual std::vector<double> QueryExtensions(
      std::span<const Vertex> base, std::span<const Vertex> candidates) const;

  // Declared absolute error bound |F(X) - f(X)| <= eps_abs(); 0 when exact.
  virtual double eps_abs() const { return 0.0; }

  // True only when F is known to be monotone submodular (enables lazy greedy).
  virtual bool declares_submodular() const { return false; }
};

using OraclePtr = std::shared_ptr<const Oracle>;

// f(X): average over the N realizations of the number of vertices reachable
// from X along alive edges, X included.
class ExactReachabilityOracle : public Oracle {
 public:
  ExactReachabilityOracle(std::shared_ptr<const Graph> graph,
                          std::shared_ptr<const RealizationSet> realizations,
                          bool enable_cache = false);

  std::size_t ground_set_size() const override { return graph_->num_vertices(); }
  double Query(std::span<const Vertex> set) const override;
  std::vector<double> QueryExtensions(
      std::span<const Vertex> base,
      std::span<const Vertex> candidates) const override;
  bool declares_submodular() const override { return true; }

  // Sum over instances of |reachable_i(X)|.
  std::uint64_t TotalReachable(std::span<const Vertex> set) const;
  // |reachable_i(X)| in one instance.
  std::size_t ReachableInInstance(std::size_t instance,
                                  std::span<const Vertex> set) const;

  const Graph& graph() const { return *graph_; }
  const RealizationSet& realizations() const { return *realizations_; }

 private:
  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<const RealizationSet> realizations_;
  bool cache_enabled_;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::uint64_t,
                             std::vector<std::pair<std::vector<Vertex>, double>>>
      cache_;
};

OraclePtr MakeExactReachabilityOracle(Graph graph, RealizationSet realizations);

// min(F, tau). Keeps the wrapped oracle's error bound.
class TruncatedOracle : public Oracle {
 public:
  TruncatedOracle(OraclePtr base, double tau);

  std::size_t ground_set_size() const override { return base_->ground_set_size(); }
  double Query(std::span<const Vertex> set) const override;
  std::vector<double> QueryExtensions(
      std::span<const Vertex> base,
      std::span<const Vertex> candidates) const override;
  double eps_abs() const override { return base_->eps_abs(); }
  bool declares_submodular() const override { return base_->declares_submodular(); }
  double tau() const { return tau_; }

 private:
  OraclePtr base_;
  double tau_;
};

OraclePtr Truncate(OraclePtr oracle, double tau);

enum class NoiseMode {
  // eta(X) uniform on [-eps, eps], keyed by (seed, X).
  kUniform,
  // eta(X) = +eps for even |X|, -eps for odd |X|: every marginal gain is
  // shifted by 2 eps.
  kAdversarialAlternating,
};

// max(0, f(X) + eta(X)) with |eta(X)| <= eps. The result is nudged so that
// f(X) - eps <= F(X) <= f(X) + eps also holds in floating point.
class NoisyOracle : public Oracle {
 public:
  NoisyOracle(OraclePtr exact, double eps, std::uint64_t seed, NoiseMode mode);

  std::size_t ground_set_size() const override { return exact_->ground_set_size(); }
  double Query(std::span<const Vertex> set) const override;
  double eps_abs() const override { return eps_; }

 private:
  OraclePtr exact_;
  double eps_;
  std::uint64_t seed_;
  NoiseMode mode_;
};

// f(X) = sum of per-element values (all >= 0).
class ModularOracle : public Oracle {
 public:
  explicit ModularOracle(std::vector<double> values);

  std::size_t ground_set_size() const override { return values_.size(); }
  double Query(std::span<const Vertex> set) const override;
  bool declares_submodular() const override { return true; }

 private:
  std::vector<double> values_;
};

// f(X) = total weight of items covered by some element of X.
class WeightedCoverageOracle : public Oracle {
 public:
  WeightedCoverageOracle(std::vector<std::vector<std::uint32_t>> covers,
                         std::vector<double> item_weights);

  std::size_t ground_set_size() const override { return covers_.size(); }
  double Query(std::span<const Vertex> set) const override;
  bool declares_submodular() const override { return true; }

  double TotalWeight() const;

 private:
  std::vector<std::vector<std::uint32_t>> covers_;
  std::vector<double> weights_;
};

// Wraps a callable. The callable must be pure and thread-safe.
class FunctionOracle : public Oracle {
 public:
  using Fn = std::function<double(std::span<const Vertex>)>;
  FunctionOracle(std::size_t n, Fn fn, double eps_abs = 0.0,
                 bool submodular = false);

  std::size_t ground_set_size() const override { return n_; }
  double Query(std::span<const Vertex> set) const override { return fn_(set); }
  double eps_abs() const override { return eps_; }
  bool declares_submodular() const override { return submodular_; }

 private:
  std::size_t n_;
  Fn fn_;
  double eps_;
  bool submodular_;
};

// Relative error eps_rel on a function bounded by tau is absolute error
// eps_rel * tau.
double RelToAbsEps(double eps_rel, double tau);

}  // namespace scsc

#endif  // SCSC_ORACLE_H_
