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
// Combined bottom-k reachability sketches
//

// Every (vertex, instance) pair gets a uniform rank in (0, 1). The sketch of
// u keeps the k smallest ranks among pairs (v, i) with v reachable from u in
// instance i. The union of the sketches of a seed set estimates its average
// reachability:
//
//   |U| < k:  F(X) = |U| / N
//   else:     F(X) = (k - 1) / (N t),  t = k-th smallest rank in U.

#ifndef SCSC_SKETCH_H_
#define SCSC_SKETCH_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "scsc/graph.h"
#include "scsc/oracle.h"

namespace scsc {

// rank(v, i), computed on demand from the seed, or looked up in an explicit
// table (fixtures). Ties in value are ordered by (v, i).
class RankAssignment {
 public:
  RankAssignment(std::size_t n, std::size_t num_instances, std::uint64_t seed);

  // table[v * num_instances + i] = rank(v, i); every entry in (0, 1).
  static RankAssignment FromTable(std::size_t n, std::size_t num_instances,
                                  std::vector<double> table);

  double Rank(Vertex v, std::size_t instance) const;

  std::size_t num_vertices() const { return n_; }
  std::size_t num_instances() const { return num_instances_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::size_t n_;
  std::size_t num_instances_;
  std::uint64_t seed_;
  std::vector<double> table_;
};

class ReachSketch {
 public:
  ReachSketch(std::size_t k, std::size_t num_instances, std::uint64_t seed,
              std::vector<std::vector<double>> per_vertex);

  std::size_t k() const { return k_; }
  std::size_t num_instances() const { return num_instances_; }
  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::uint64_t seed() const { return seed_; }

  // Ascending, at most k values.
  std::span<const double> Of(Vertex u) const {
    return {ranks_.data() + offsets_[u], ranks_.data() + offsets_[u + 1]};
  }

  friend bool operator==(const ReachSketch&, const ReachSketch&) = default;

 private:
  std::size_t k_;
  std::size_t num_instances_;
  std::uint64_t seed_;
  std::vector<std::size_t> offsets_;
  std::vector<double> ranks_;
};

// Per (u, i) forward BFS keeping a bounded max-heap. O(n N m); reference.
ReachSketch BuildSketchesNaive(const Graph& graph,
                               const RealizationSet& realizations,
                               const RankAssignment& ranks, std::size_t k);

// Processes (v, i) pairs in increasing rank and reverse-searches from v in
// instance i, inserting the rank into every reached sketch that is not full.
// A search stops at vertices whose whole instance-i upstream is already full;
// the output equals BuildSketchesNaive exactly.
ReachSketch BuildSketches(const Graph& graph, const RealizationSet& realizations,
                          const RankAssignment& ranks, std::size_t k);

double SketchEstimate(const ReachSketch& sketch, std::span<const Vertex> set);

// k = ceil(c * eps_rel^-2 * ln n). Requires c > 2, eps_rel in (0, 1), n >= 2.
std::size_t SketchSizeFor(double eps_rel, std::size_t n, double c);

class SketchOracle : public Oracle {
 public:
  explicit SketchOracle(std::shared_ptr<const ReachSketch> sketch,
                        double eps_abs = 0.0);

  std::size_t ground_set_size() const override { return sketch_->num_vertices(); }
  double Query(std::span<const Vertex> set) const override;
  std::vector<double> QueryExtensions(
      std::span<const Vertex> base,
      std::span<const Vertex> candidates) const override;
  double eps_abs() const override { return eps_abs_; }

  const ReachSketch& sketch() const { return *sketch_; }

 private:
  std::shared_ptr<const ReachSketch> sketch_;
  double eps_abs_;
};

// Little-endian "SCSCSK01" | u32 n | u32 k | u32 N | u64 seed |
// per vertex: u32 len, len x f64 ascending ranks.
std::string SerializeSketch(const ReachSketch& sketch);
ReachSketch DeserializeSketch(std::string_view bytes);
void SaveSketch(const ReachSketch& sketch, const std::string& path);
ReachSketch LoadSketch(const std::string& path);

class SketchFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scsc

#endif  // SCSC_SKETCH_H_
