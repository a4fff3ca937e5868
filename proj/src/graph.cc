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

#include "scsc/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "scsc/philox.h"

namespace scsc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

Graph Graph::FromEdges(std::size_t n,
                       std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("too many vertices");
  }
  std::vector<std::pair<Vertex, Vertex>> sorted;
  sorted.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u != v) sorted.emplace_back(u, v);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() > std::numeric_limits<EdgeIndex>::max()) {
    throw std::invalid_argument("too many edges");
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.in_degree_.assign(n, 0);
  g.targets_.reserve(sorted.size());
  for (const auto& [u, v] : sorted) {
    ++g.offsets_[u + 1];
    ++g.in_degree_[v];
    g.targets_.push_back(v);
  }
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
  g.probs_.assign(sorted.size(), 0.0);

  g.in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.in_offsets_[v + 1] = g.in_offsets_[v] + g.in_degree_[v];
  }
  g.in_edges_.resize(sorted.size());
  g.in_sources_.resize(sorted.size());
  std::vector<EdgeIndex> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (EdgeIndex e = 0; e < g.targets_.size(); ++e) {
    const EdgeIndex slot = fill[g.targets_[e]]++;
    g.in_edges_[slot] = e;
    g.in_sources_[slot] = sorted[e].first;
  }
  return g;
}

Vertex Graph::Source(EdgeIndex e) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), e);
  return static_cast<Vertex>(std::distance(offsets_.begin(), it) - 1);
}

Graph Graph::WithProbabilities(std::vector<double> probs) const {
  if (probs.size() != num_edges()) {
    throw std::invalid_argument("probability vector size != edge count");
  }
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("edge probability outside [0, 1]");
    }
  }
  Graph g = *this;
  g.probs_ = std::move(probs);
  return g;
}

Graph Graph::WithUniformProbability(double p) const {
  return WithProbabilities(std::vector<double>(num_edges(), p));
}

std::vector<std::pair<Vertex, Vertex>> Graph::EdgeList() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (EdgeIndex e = EdgeBegin(u); e < EdgeEnd(u); ++e) {
      out.emplace_back(u, targets_[e]);
    }
  }
  return out;
}

Graph LoadEdgeList(std::string_view text, bool undirected) {
  std::unordered_map<std::int64_t, Vertex> remap;
  std::vector<std::int64_t> original;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto intern = [&](std::int64_t id) {
    auto [it, inserted] = remap.try_emplace(id, static_cast<Vertex>(original.size()));
    if (inserted) original.push_back(id);
    return it->second;
  };

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    std::int64_t ids[2];
    int count = 0;
    std::size_t pos = 0;
    auto is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
    };
    while (true) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos == line.size()) break;
      if (count == 0 && line[pos] == '#') break;
      std::size_t end = pos;
      while (end < line.size() && !is_space(line[end])) ++end;
      const std::string_view token = line.substr(pos, end - pos);
      if (count == 2) throw ParseError(line_no, "expected exactly two ids");
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "non-integer token '" + std::string(token) + "'");
      }
      ids[count++] = value;
      pos = end;
    }
    if (count == 0) continue;
    if (count != 2) throw ParseError(line_no, "expected exactly two ids");
    const Vertex u = intern(ids[0]);
    const Vertex v = intern(ids[1]);
    edges.emplace_back(u, v);
    if (undirected) edges.emplace_back(v, u);
  }

  Graph g = Graph::FromEdges(original.size(), edges);
  g.original_ids_ = std::move(original);
  return g;
}

Graph LoadEdgeListFile(const std::string& path, bool undirected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadEdgeList(buffer.str(), undirected);
}

std::string SerializeEdgeList(const Graph& graph) {
  std::string out;
  for (const auto& [u, v] : graph.EdgeList()) {
    out += std::to_string(graph.OriginalId(u));
    out += ' ';
    out += std::to_string(graph.OriginalId(v));
    out += '\n';
  }
  return out;
}

Graph WeightedCascadeProbabilities(const Graph& graph, double q) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q must be in (0, 1]");
  std::vector<double> probs(graph.num_edges());
  for (EdgeIndex e = 0; e < probs.size(); ++e) {
    probs[e] = q / graph.InDegree(graph.Target(e));
  }
  return graph.WithProbabilities(std::move(probs));
}

Graph ErdosRenyiGraph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && UniformHalfOpen(seed, Stream::kGraph, u, v) < p) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph::FromEdges(n, edges);
}

RealizationSet RealizationSet::FromMasks(
    const Graph& graph, const std::vector<std::vector<bool>>& masks) {
  RealizationSet r;
  r.num_instances_ = masks.size();
  r.num_edges_ = graph.num_edges();
  r.words_per_instance_ = (r.num_edges_ + 63) / 64;
  r.words_.assign(r.num_instances_ * r.words_per_instance_, 0);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (masks[i].size() != r.num_edges_) {
      throw std::invalid_argument("mask length != edge count");
    }
    for (EdgeIndex e = 0; e < r.num_edges_; ++e) {
      if (masks[i][e]) {
        r.words_[i * r.words_per_instance_ + (e >> 6)] |= std::uint64_t{1} << (e & 63);
      }
    }
  }
  return r;
}

std::size_t RealizationSet::CountAlive(std::size_t instance) const {
  std::size_t total = 0;
  for (std::uint64_t w : InstanceWords(instance)) total += std::popcount(w);
  return total;
}

RealizationSet SampleRealizations(const Graph& graph, std::size_t num_instances,
                                  std::uint64_t seed) {
  if (num_instances < 1) throw std::invalid_argument("N must be >= 1");
  if (num_instances > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("N too large");
  }
  RealizationSet r;
  r.num_instances_ = num_instances;
  r.num_edges_ = graph.num_edges();
  r.words_per_instance_ = (r.num_edges_ + 63) / 64;
  r.seed_ = seed;
  r.words_.assign(num_instances * r.words_per_instance_, 0);
  for (std::size_t i = 0; i < num_instances; ++i) {
    std::uint64_t* words = r.words_.data() + i * r.words_per_instance_;
    for (EdgeIndex e = 0; e < r.num_edges_; ++e) {
      const double p = graph.Probability(e);
      if (p <= 0.0) continue;
      if (UniformHalfOpen(seed, Stream::kEdgeLiveness, e,
                          static_cast<std::uint32_t>(i)) < p) {
        words[e >> 6] |= std::uint64_t{1} << (e & 63);
      }
    }
  }
  return r;
}

}  // namespace scsc
