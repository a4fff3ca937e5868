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
// Influence graph and sampled realizations
//

#ifndef SCSC_GRAPH_H_
#define SCSC_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scsc {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// Malformed edge-list or cost file. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Directed graph in forward-star (CSR) layout with one activation
// probability per edge. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds from dense ids in [0, n). Duplicate edges collapse to one and
  // self-loops are dropped. Probabilities start at 0.
  static Graph FromEdges(std::size_t n,
                         std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return in_degree_.size(); }
  std::size_t num_edges() const { return targets_.size(); }

  // Out-edges of u occupy [EdgeBegin(u), EdgeEnd(u)), sorted by target.
  EdgeIndex EdgeBegin(Vertex u) const { return offsets_[u]; }
  EdgeIndex EdgeEnd(Vertex u) const { return offsets_[u + 1]; }
  Vertex Target(EdgeIndex e) const { return targets_[e]; }
  Vertex Source(EdgeIndex e) const;
  double Probability(EdgeIndex e) const { return probs_[e]; }
  std::span<const double> probabilities() const { return probs_; }

  std::uint32_t InDegree(Vertex v) const { return in_degree_[v]; }
  std::uint32_t OutDegree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }

  // Reverse adjacency: in-edges of v, reported as forward edge indices.
  std::span<const EdgeIndex> InEdges(Vertex v) const {
    return {in_edges_.data() + in_offsets_[v],
            in_edges_.data() + in_offsets_[v + 1]};
  }
  // Sources of InEdges(v), position for position.
  std::span<const Vertex> InSources(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }

  // Id of v in the loaded file; identity for graphs built in code.
  std::int64_t OriginalId(Vertex v) const {
    return original_ids_.empty() ? static_cast<std::int64_t>(v)
                                 : original_ids_[v];
  }
  std::span<const std::int64_t> original_ids() const { return original_ids_; }

  // Copy with the given per-edge probabilities (each in [0, 1]).
  Graph WithProbabilities(std::vector<double> probs) const;
  Graph WithUniformProbability(double p) const;

  // Out-edge list as (source, target) dense-id pairs in edge order.
  std::vector<std::pair<Vertex, Vertex>> EdgeList() const;

 private:
  friend Graph LoadEdgeList(std::string_view, bool);

  std::vector<EdgeIndex> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<double> probs_;
  std::vector<std::uint32_t> in_degree_;
  std::vector<EdgeIndex> in_offsets_{0};
  std::vector<EdgeIndex> in_edges_;
  std::vector<Vertex> in_sources_;
  std::vector<std::int64_t> original_ids_;
};

// Parses whitespace-separated "u v" integer pairs; '#' starts a comment line.
// Vertices are remapped to 0..n-1 in first-appearance order. With
// undirected=true each line contributes both directions.
Graph LoadEdgeList(std::string_view text, bool undirected = false);
Graph LoadEdgeListFile(const std::string& path, bool undirected = false);

// "u v" lines using original ids.
std::string SerializeEdgeList(const Graph& graph);

// Weighted cascade: edge (u -> v) gets q / in_degree(v). q must be in (0, 1].
Graph WeightedCascadeProbabilities(const Graph& graph, double q);

// Directed G(n, p) without self-loops, keyed by seed.
Graph ErdosRenyiGraph(std::size_t n, double p, std::uint64_t seed);

// N sampled alive-edge subgraphs. Instance i, edge e is alive iff
// UniformHalfOpen(seed, kEdgeLiveness, e, i) < probability(e), so every
// instance is reproducible on its own and a set built with N instances is a
// prefix of one built with more.
class RealizationSet {
 public:
  RealizationSet() = default;

  // Explicit liveness, one mask per instance (each of length num_edges).
  static RealizationSet FromMasks(const Graph& graph,
                                  const std::vector<std::vector<bool>>& masks);

  std::size_t num_instances() const { return num_instances_; }
  std::size_t num_edges() const { return num_edges_; }
  std::uint64_t seed() const { return seed_; }

  bool Alive(std::size_t instance, EdgeIndex e) const {
    return (words_[instance * words_per_instance_ + (e >> 6)] >> (e & 63)) & 1u;
  }
  std::span<const std::uint64_t> InstanceWords(std::size_t instance) const {
    return {words_.data() + instance * words_per_instance_, words_per_instance_};
  }
  std::size_t CountAlive(std::size_t instance) const;

  friend bool operator==(const RealizationSet&, const RealizationSet&) = default;

 private:
  friend RealizationSet SampleRealizations(const Graph&, std::size_t,
                                           std::uint64_t);

  std::size_t num_instances_ = 0;
  std::size_t num_edges_ = 0;
  std::size_t words_per_instance_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::uint64_t> words_;
};

RealizationSet SampleRealizations(const Graph& graph, std::size_t num_instances,
                                  std::uint64_t seed);

}  // namespace scsc

#endif  // SCSC_GRAPH_H_
