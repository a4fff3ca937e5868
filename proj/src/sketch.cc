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

#include "scsc/sketch.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "scsc/philox.h"

namespace scsc {

RankAssignment::RankAssignment(std::size_t n, std::size_t num_instances,
                               std::uint64_t seed)
    : n_(n), num_instances_(num_instances), seed_(seed) {
  if (n > std::numeric_limits<std::uint32_t>::max() ||
      num_instances > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("rank assignment dimensions too large");
  }
}

RankAssignment RankAssignment::FromTable(std::size_t n,
                                         std::size_t num_instances,
                                         std::vector<double> table) {
  if (table.size() != n * num_instances) {
    throw std::invalid_argument("rank table size != n * N");
  }
  for (double r : table) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("rank outside (0, 1)");
  }
  RankAssignment ranks(n, num_instances, 0);
  ranks.table_ = std::move(table);
  return ranks;
}

double RankAssignment::Rank(Vertex v, std::size_t instance) const {
  if (!table_.empty()) return table_[v * num_instances_ + instance];
  return UniformOpen(seed_, Stream::kRank, v, static_cast<std::uint32_t>(instance));
}

ReachSketch::ReachSketch(std::size_t k, std::size_t num_instances,
                         std::uint64_t seed,
                         std::vector<std::vector<double>> per_vertex)
    : k_(k), num_instances_(num_instances), seed_(seed) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (num_instances == 0) throw std::invalid_argument("N must be >= 1");
  offsets_.reserve(per_vertex.size() + 1);
  offsets_.push_back(0);
  for (const auto& list : per_vertex) {
    if (list.size() > k) throw std::invalid_argument("sketch longer than k");
    if (!std::is_sorted(list.begin(), list.end())) {
      throw std::invalid_argument("sketch not ascending");
    }
    ranks_.insert(ranks_.end(), list.begin(), list.end());
    offsets_.push_back(ranks_.size());
  }
}

namespace {

void CheckBuildInputs(const Graph& graph, const RealizationSet& realizations,
                      const RankAssignment& ranks, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (realizations.num_edges() != graph.num_edges()) {
    throw std::invalid_argument("realizations do not match graph");
  }
  if (ranks.num_vertices() != graph.num_vertices() ||
      ranks.num_instances() != realizations.num_instances()) {
    throw std::invalid_argument("rank assignment does not match instance");
  }
}

}  // namespace

ReachSketch BuildSketchesNaive(const Graph& graph,
                               const RealizationSet& realizations,
                               const RankAssignment& ranks, std::size_t k) {
  CheckBuildInputs(graph, realizations, ranks, k);
  const std::size_t n = graph.num_vertices();
  std::vector<std::vector<double>> sketches(n);
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t generation = 0;
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    std::priority_queue<double> heap;
    for (std::size_t i = 0; i < realizations.num_instances(); ++i) {
      ++generation;
      queue.assign(1, u);
      seen[u] = generation;
      const auto words = realizations.InstanceWords(i);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex w = queue[head];
        const double r = ranks.Rank(w, i);
        if (heap.size() < k) {
          heap.push(r);
        } else if (r < heap.top()) {
          heap.pop();
          heap.push(r);
        }
        for (EdgeIndex e = graph.EdgeBegin(w); e < graph.EdgeEnd(w); ++e) {
          if (!((words[e >> 6] >> (e & 63)) & 1u)) continue;
          const Vertex v = graph.Target(e);
          if (seen[v] == generation) continue;
          seen[v] = generation;
          queue.push_back(v);
        }
      }
    }
    auto& out = sketches[u];
    out.resize(heap.size());
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      *it = heap.top();
      heap.pop();
    }
  }
  return ReachSketch(k, realizations.num_instances(), ranks.seed(),
                     std::move(sketches));
}

ReachSketch BuildSketches(const Graph& graph, const RealizationSet& realizations,
                          const RankAssignment& ranks, std::size_t k) {
  CheckBuildInputs(graph, realizations, ranks, k);
  const std::size_t n = graph.num_vertices();
  const std::size_t num = realizations.num_instances();
  std::vector<std::vector<double>> sketches(n);
  if (n == 0) return ReachSketch(k, num, ranks.seed(), std::move(sketches));

  // dead[i * n + u]: every vertex that reaches u in instance i is full.
  std::vector<std::uint64_t> dead((n * num + 63) / 64, 0);
  auto is_dead = [&](std::size_t i, Vertex u) {
    const std::size_t bit = i * n + u;
    return (dead[bit >> 6] >> (bit & 63)) & 1u;
  };
  auto set_dead = [&](std::size_t i, Vertex u) {
    const std::size_t bit = i * n + u;
    dead[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  };

  std::size_t full = 0;
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t generation = 0;
  std::vector<Vertex> queue;

  struct Pair {
    double rank;
    Vertex v;
    std::uint32_t instance;
  };
  std::vector<Pair> bucket;

  // Ranks are enumerated in geometrically growing windows [lo, hi) so that
  // only the pairs that can still matter are ever sorted.
  double lo = 0.0;
  double hi = std::min(
      1.0, 4.0 * static_cast<double>(k) / (static_cast<double>(n) * num));
  while (full < n) {
    bucket.clear();
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < num; ++i) {
        const double r = ranks.Rank(v, i);
        if (r >= lo && (r < hi || hi >= 1.0)) {
          bucket.push_back({r, v, static_cast<std::uint32_t>(i)});
        }
      }
    }
    std::sort(bucket.begin(), bucket.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.rank, a.v, a.instance) < std::tie(b.rank, b.v, b.instance);
    });

    for (const Pair& p : bucket) {
      if (full == n) break;
      if (is_dead(p.instance, p.v)) continue;
      const auto words = realizations.InstanceWords(p.instance);
      ++generation;
      queue.assign(1, p.v);
      seen[p.v] = generation;
      bool all_full = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        auto& sketch = sketches[u];
        if (sketch.size() < k) {
          sketch.push_back(p.rank);
          if (sketch.size() == k) ++full;
        }
        if (sketch.size() < k) all_full = false;
        const auto in_edges = graph.InEdges(u);
        const auto in_sources = graph.InSources(u);
        for (std::size_t j = 0; j < in_edges.size(); ++j) {
          const EdgeIndex e = in_edges[j];
          if (!((words[e >> 6] >> (e & 63)) & 1u)) continue;
          const Vertex w = in_sources[j];
          if (seen[w] == generation || is_dead(p.instance, w)) continue;
          seen[w] = generation;
          queue.push_back(w);
        }
      }
      if (all_full) {
        for (Vertex u : queue) set_dead(p.instance, u);
      }
    }
    if (hi >= 1.0) break;
    lo = hi;
    hi = std::min(1.0, hi * 4.0);
  }
  return ReachSketch(k, num, ranks.seed(), std::move(sketches));
}

namespace {

double EstimateFromUnion(std::size_t distinct, double kth, std::size_t k,
                         std::size_t num_instances) {
  if (distinct < k) {
    return static_cast<double>(distinct) / static_cast<double>(num_instances);
  }
  return static_cast<double>(k - 1) /
         (static_cast<double>(num_instances) * kth);
}

void CheckSet(std::span<const Vertex> set, std::size_t n) {
  for (Vertex v : set) {
    if (v >= n) throw std::out_of_range("vertex id outside ground set");
  }
}

}  // namespace

double SketchEstimate(const ReachSketch& sketch, std::span<const Vertex> set) {
  CheckSet(set, sketch.num_vertices());
  if (set.empty()) return 0.0;
  std::vector<double> merged;
  for (Vertex u : set) {
    const auto list = sketch.Of(u);
    merged.insert(merged.end(), list.begin(), list.end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  const std::size_t k = sketch.k();
  return EstimateFromUnion(merged.size(),
                           merged.size() >= k ? merged[k - 1] : 0.0, k,
                           sketch.num_instances());
}

std::size_t SketchSizeFor(double eps_rel, std::size_t n, double c) {
  if (!(c > 2.0)) throw std::invalid_argument("c must be > 2");
  if (!(eps_rel > 0.0 && eps_rel < 1.0)) {
    throw std::invalid_argument("eps_rel must be in (0, 1)");
  }
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return static_cast<std::size_t>(
      std::ceil(c / (eps_rel * eps_rel) * std::log(static_cast<double>(n))));
}

SketchOracle::SketchOracle(std::shared_ptr<const ReachSketch> sketch,
                           double eps_abs)
    : sketch_(std::move(sketch)), eps_abs_(eps_abs) {
  if (!sketch_) throw std::invalid_argument("null sketch");
}

double SketchOracle::Query(std::span<const Vertex> set) const {
  return SketchEstimate(*sketch_, set);
}

std::vector<double> SketchOracle::QueryExtensions(
    std::span<const Vertex> base, std::span<const Vertex> candidates) const {
  const ReachSketch& s = *sketch_;
  CheckSet(base, s.num_vertices());
  CheckSet(candidates, s.num_vertices());
  const std::size_t k = s.k();
  // Only the k smallest distinct ranks of the base union can influence the
  // estimate of any superset.
  std::vector<double> base_union;
  for (Vertex u : base) {
    const auto list = s.Of(u);
    base_union.insert(base_union.end(), list.begin(), list.end());
  }
  std::sort(base_union.begin(), base_union.end());
  base_union.erase(std::unique(base_union.begin(), base_union.end()),
                   base_union.end());
  if (base_union.size() > k) base_union.resize(k);

  std::vector<double> out;
  out.reserve(candidates.size());
  for (Vertex x : candidates) {
    const auto extra = s.Of(x);
    std::size_t a = 0, b = 0, distinct = 0;
    double last = -1.0;
    while (distinct < k && (a < base_union.size() || b < extra.size())) {
      double next;
      if (b == extra.size() ||
          (a < base_union.size() && base_union[a] <= extra[b])) {
        next = base_union[a++];
      } else {
        next = extra[b++];
      }
      if (distinct > 0 && next == last) continue;
      last = next;
      ++distinct;
    }
    out.push_back(EstimateFromUnion(distinct, last, k, s.num_instances()));
  }
  return out;
}

namespace {

constexpr char kMagic[8] = {'S', 'C', 'S', 'C', 'S', 'K', '0', '1'};

void PutU32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
}

void PutU64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  std::uint64_t Read(int width) {
    if (bytes_.size() - pos_ < static_cast<std::size_t>(width)) {
      throw SketchFormatError("truncated sketch file");
    }
    std::uint64_t v = 0;
    for (int b = 0; b < width; ++b) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + b]))
           << (8 * b);
    }
    pos_ += width;
    return v;
  }
  std::uint32_t U32() { return static_cast<std::uint32_t>(Read(4)); }
  std::uint64_t U64() { return Read(8); }
  double F64() { return std::bit_cast<double>(Read(8)); }
  bool AtEnd() const { return pos_ == bytes_.size(); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string SerializeSketch(const ReachSketch& sketch) {
  std::string out(kMagic, sizeof(kMagic));
  PutU32(out, static_cast<std::uint32_t>(sketch.num_vertices()));
  PutU32(out, static_cast<std::uint32_t>(sketch.k()));
  PutU32(out, static_cast<std::uint32_t>(sketch.num_instances()));
  PutU64(out, sketch.seed());
  for (Vertex u = 0; u < sketch.num_vertices(); ++u) {
    const auto list = sketch.Of(u);
    PutU32(out, static_cast<std::uint32_t>(list.size()));
    for (double r : list) PutU64(out, std::bit_cast<std::uint64_t>(r));
  }
  return out;
}

ReachSketch DeserializeSketch(std::string_view bytes) {
  if (bytes.size() < sizeof(kMagic) ||
      std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw SketchFormatError("bad sketch magic");
  }
  ByteReader in(bytes.substr(sizeof(kMagic)));
  const std::uint32_t n = in.U32();
  const std::uint32_t k = in.U32();
  const std::uint32_t num = in.U32();
  const std::uint64_t seed = in.U64();
  if (k == 0 || num == 0) throw SketchFormatError("k and N must be >= 1");
  std::vector<std::vector<double>> lists(n);
  for (auto& list : lists) {
    const std::uint32_t len = in.U32();
    if (len > k) throw SketchFormatError("sketch length exceeds k");
    list.resize(len);
    for (double& r : list) {
      r = in.F64();
      if (!(r > 0.0 && r < 1.0)) throw SketchFormatError("rank outside (0, 1)");
    }
    if (!std::is_sorted(list.begin(), list.end())) {
      throw SketchFormatError("sketch ranks not ascending");
    }
  }
  if (!in.AtEnd()) throw SketchFormatError("trailing bytes after sketch");
  return ReachSketch(k, num, seed, std::move(lists));
}

void SaveSketch(const ReachSketch& sketch, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  const std::string bytes = SerializeSketch(sketch);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

ReachSketch LoadSketch(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return DeserializeSketch(buffer.str());
}

}  // namespace scsc
