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


#include "scsc/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "scsc/format.h"
#include "scsc/greedy.h"
#include "scsc/guarantees.h"

namespace scsc {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(Trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

[[noreturn]] void BadValue(std::string_view key, std::string_view value) {
  throw std::invalid_argument("bad value for " + std::string(key) + ": '" +
                              std::string(value) + "'");
}

double ParseDouble(std::string_view key, std::string_view value) {
  value = Trim(value);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) BadValue(key, value);
  return out;
}

std::uint64_t ParseUint(std::string_view key, std::string_view value) {
  value = Trim(value);
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) BadValue(key, value);
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  value = Trim(value);
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  BadValue(key, value);
}

std::vector<double> ParseList(std::string_view key, std::string_view value) {
  std::vector<double> out;
  for (std::string_view item : Split(value, ',')) {
    out.push_back(ParseDouble(key, item));
  }
  return out;
}

// Empty list for the keyword, parsed list otherwise.
std::vector<double> ParseListOr(std::string_view key, std::string_view value,
                                std::string_view keyword) {
  if (Trim(value) == keyword) return {};
  return ParseList(key, value);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string Opt(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

CostPtr BuildCost(const ExperimentConfig& config, std::size_t n) {
  const std::string& spec = config.cost;
  if (spec == "normal") {
    return MakeModularCost(
        SampleNormalCosts(n, config.cost_mean, config.cost_sd, config.seed));
  }
  if (spec == "unit") return MakeModularCost(std::vector<double>(n, 1.0));
  if (spec.starts_with("file:")) {
    std::vector<double> costs = LoadCostsFile(spec.substr(5));
    if (costs.size() != n) {
      throw std::invalid_argument("cost file has " + std::to_string(costs.size()) +
                                  " values for " + std::to_string(n) + " vertices");
    }
    return MakeModularCost(std::move(costs));
  }
  if (spec.starts_with("concave:")) {
    const double p = ParseDouble("cost", std::string_view(spec).substr(8));
    return MakeConcaveCardinalityCost(
        SampleNormalCosts(n, config.cost_mean, config.cost_sd, config.seed), p);
  }
  BadValue("cost", spec);
}

std::vector<double> RhoValues(const ExperimentConfig& config,
                              const CostModel& cost) {
  if (!config.rho.empty()) return config.rho;
  if (auto rho = cost.declared_curvature()) return {*rho};
  if (cost.size() <= kMaxCurvatureGround) {
    std::vector<Vertex> all(cost.size());
    for (Vertex x = 0; x < all.size(); ++x) all[x] = x;
    return {CurvatureBruteForce(cost, all)};
  }
  throw std::invalid_argument("cost curvature unknown; set rho explicitly");
}

// One greedy run and the rows certified from it.
struct Job {
  double tau;
  double greedy_eps_rel;  // 0 means the exact oracle
  std::vector<double> levels;
};

struct Context {
  const ExperimentConfig& config;
  const Dataset& dataset;
  std::map<double, std::shared_ptr<const ReachSketch>> sketches;
  std::vector<double> rho;
  std::vector<double> grid;
  double c_min;
  double c_max;
};

std::vector<ExperimentRow> RunJob(const Context& ctx, const Job& job) {
  const Dataset& ds = ctx.dataset;
  const double tau = job.tau;
  OraclePtr oracle = ds.exact;
  if (job.greedy_eps_rel > 0.0) {
    oracle = std::make_shared<SketchOracle>(
        ctx.sketches.at(job.greedy_eps_rel),
        RelToAbsEps(job.greedy_eps_rel, tau));
  }
  const GreedyResult run = Greedy(*oracle, *ds.cost, tau);
  const GreedyTrace& trace = run.trace;
  const double f_of_a = ds.exact->Query(run.solution);
  const double cost_of_a = ds.cost->Eval(run.solution);

  std::optional<TraceStats> exact;
  if (!trace.iterations.empty() &&
      (ctx.config.exact_stats || job.greedy_eps_rel == 0.0)) {
    try {
      exact = TraceStatsExact(*ds.exact, trace);
    } catch (const std::domain_error&) {
    }
  }

  std::vector<ExperimentRow> rows;
  for (double level : job.levels) {
    const double eps_abs = level > 0.0 ? RelToAbsEps(level, tau) : 0.0;
    std::optional<TraceStats> bounds;
    if (level == 0.0) {
      bounds = exact;
    } else if (!trace.iterations.empty()) {
      bounds = TraceStatsBounds(*oracle, trace, eps_abs);
    }
    for (double rho : ctx.rho) {
      ExperimentRow row;
      row.dataset = ds.name;
      row.n = ds.n;
      row.eps_rel = level;
      row.eps_abs = eps_abs;
      row.rho = rho;
      row.tau = tau;
      row.iters = trace.iterations.size();
      row.cost_of_a = cost_of_a;
      row.f_of_a = f_of_a;
      row.feasible = f_of_a >= tau - eps_abs;
      if (exact) {
        row.beta = exact->beta;
        const RatioCertificate r1 =
            RatioThm1(eps_abs, rho, ctx.c_min, ctx.c_max, exact->mu,
                      exact->alpha, *exact->beta);
        row.ratio1_valid = r1.valid;
        row.ratio1 = r1.value;
      }
      if (bounds) {
        row.mu_or_lb = bounds->mu;
        row.alpha_or_ub = bounds->alpha;
        const RatioCertificate r2 =
            BestGamma(eps_abs, rho, ctx.c_min, ctx.c_max, bounds->mu,
                      bounds->alpha, ds.n, ctx.grid);
        row.ratio2_valid = r2.valid;
        row.ratio2_ub = r2.value;
        if (r2.valid) row.gamma_star = r2.gamma;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::map<std::string, std::string> ParseKeyValueText(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    const std::string_view key = Trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(line_no, "empty key");
    out[std::string(key)] = std::string(Trim(line.substr(eq + 1)));
  }
  return out;
}

void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value) {
  value = Trim(value);
  if (key == "dataset") {
    config.dataset = std::string(value);
  } else if (key == "directed") {
    config.directed = ParseBool(key, value);
  } else if (key == "q") {
    config.q = ParseDouble(key, value);
  } else if (key == "N" || key == "num_instances") {
    config.num_instances = ParseUint(key, value);
  } else if (key == "seed") {
    config.seed = ParseUint(key, value);
  } else if (key == "eps_rel") {
    config.eps_rel = ParseList(key, value);
  } else if (key == "c") {
    config.c = ParseDouble(key, value);
  } else if (key == "tau") {
    config.tau = ParseListOr(key, value, "auto");
  } else if (key == "auto_tau_steps") {
    config.auto_tau_steps = ParseUint(key, value);
  } else if (key == "auto_tau_stride") {
    config.auto_tau_stride = ParseUint(key, value);
  } else if (key == "cost") {
    config.cost = std::string(value);
  } else if (key == "cost_mean") {
    config.cost_mean = ParseDouble(key, value);
  } else if (key == "cost_sd") {
    config.cost_sd = ParseDouble(key, value);
  } else if (key == "rho") {
    config.rho = ParseListOr(key, value, "auto");
  } else if (key == "gamma_grid") {
    config.gamma_grid = ParseListOr(key, value, "default");
  } else if (key == "exact_stats") {
    config.exact_stats = ParseBool(key, value);
  } else if (key == "shared_oracle") {
    config.shared_oracle = ParseBool(key, value);
  } else if (key == "threads") {
    config.threads = ParseUint(key, value);
  } else if (key == "sketch_cache") {
    config.sketch_cache = std::string(value);
  } else if (key == "output") {
    config.output = std::string(value);
  } else {
    throw std::invalid_argument("unknown config key: " + std::string(key));
  }
}

ExperimentConfig ConfigFromText(std::string_view text) {
  ExperimentConfig config;
  for (const auto& [key, value] : ParseKeyValueText(text)) {
    SetConfigValue(config, key, value);
  }
  return config;
}

void ValidateConfig(const ExperimentConfig& config) {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (config.dataset.empty()) fail("dataset is required");
  if (!(config.q > 0.0 && config.q <= 1.0)) fail("q must be in (0, 1]");
  if (config.num_instances < 1) fail("N must be >= 1");
  if (config.eps_rel.empty()) fail("eps_rel list is empty");
  for (double e : config.eps_rel) {
    if (!(e > 0.0 && e < 1.0)) fail("eps_rel values must be in (0, 1)");
  }
  if (!(config.c > 2.0)) fail("c must be > 2");
  for (double t : config.tau) {
    if (!(t > 0.0)) fail("tau values must be > 0");
  }
  if (config.auto_tau_steps < 1 || config.auto_tau_stride < 1) {
    fail("auto_tau_steps and auto_tau_stride must be >= 1");
  }
  for (double r : config.rho) {
    if (!(r >= 1.0)) fail("rho values must be >= 1");
  }
  for (double g : config.gamma_grid) {
    if (!(g > 0.0 && g < 1.0)) fail("gamma grid values must be in (0, 1)");
  }
  if (config.threads < 1) fail("threads must be >= 1");
}

Dataset LoadDataset(const ExperimentConfig& config) {
  Dataset ds;
  ds.name = config.dataset;
  const std::string& spec = config.dataset;
  if (spec.starts_with("incomparability:")) {
    const auto parts = Split(std::string_view(spec).substr(16), ':');
    if (parts.size() != 2) BadValue("dataset", spec);
    const std::size_t n = ParseUint("dataset", parts[0]);
    const double sigma = ParseDouble("dataset", parts[1]);
    IncomparabilityInstance inst = MakeIncomparabilityInstance(n, sigma);
    ds.n = n;
    ds.exact = inst.f;
    ds.cost = inst.cost;
    ds.natural_tau = inst.tau;
    return ds;
  }
  Graph graph;
  if (spec.starts_with("er:")) {
    const auto parts = Split(std::string_view(spec).substr(3), ':');
    if (parts.size() != 2) BadValue("dataset", spec);
    graph = ErdosRenyiGraph(ParseUint("dataset", parts[0]),
                            ParseDouble("dataset", parts[1]), config.seed);
    if (!config.directed) {
      auto edges = graph.EdgeList();
      const std::size_t m = edges.size();
      for (std::size_t e = 0; e < m; ++e) {
        edges.emplace_back(edges[e].second, edges[e].first);
      }
      graph = Graph::FromEdges(graph.num_vertices(), edges);
    }
  } else {
    graph = LoadEdgeListFile(spec, !config.directed);
  }
  graph = WeightedCascadeProbabilities(graph, config.q);
  ds.n = graph.num_vertices();
  if (ds.n == 0) throw std::invalid_argument("dataset has no vertices");
  auto g = std::make_shared<const Graph>(std::move(graph));
  auto r = std::make_shared<const RealizationSet>(
      SampleRealizations(*g, config.num_instances, config.seed));
  ds.graph = g;
  ds.realizations = r;
  ds.exact = std::make_shared<ExactReachabilityOracle>(g, r);
  ds.cost = BuildCost(config, ds.n);
  return ds;
}

std::string SketchCachePath(const ExperimentConfig& config, std::size_t k) {
  const std::string key = config.dataset + '|' + (config.directed ? "d" : "u") +
                          '|' + FormatDouble(config.q) + '|' +
                          std::to_string(config.num_instances) + '|' +
                          std::to_string(config.seed);
  char name[64];
  std::snprintf(name, sizeof(name), "sketch-%016llx-k%zu.scsk",
                static_cast<unsigned long long>(Fnv1a(key)), k);
  return (std::filesystem::path(config.sketch_cache) / name).string();
}

std::shared_ptr<const ReachSketch> SketchFor(const ExperimentConfig& config,
                                             const Dataset& dataset,
                                             double eps_rel) {
  if (!dataset.graph) throw std::invalid_argument("dataset has no graph");
  const std::size_t k = SketchSizeFor(eps_rel, std::max<std::size_t>(dataset.n, 2),
                                      config.c);
  std::string path;
  if (!config.sketch_cache.empty()) {
    path = SketchCachePath(config, k);
    if (std::filesystem::exists(path)) {
      ReachSketch loaded = LoadSketch(path);
      if (loaded.k() == k && loaded.num_vertices() == dataset.n &&
          loaded.num_instances() == config.num_instances &&
          loaded.seed() == config.seed) {
        return std::make_shared<const ReachSketch>(std::move(loaded));
      }
    }
  }
  const RankAssignment ranks(dataset.n, config.num_instances, config.seed);
  auto sketch = std::make_shared<const ReachSketch>(
      BuildSketches(*dataset.graph, *dataset.realizations, ranks, k));
  if (!path.empty()) {
    std::filesystem::create_directories(config.sketch_cache);
    SaveSketch(*sketch, path);
  }
  return sketch;
}

std::vector<double> AutoTau(const ExperimentConfig& config,
                            const Dataset& dataset) {
  if (dataset.natural_tau) return {*dataset.natural_tau};
  GreedyOptions options;
  options.max_iterations = config.auto_tau_steps * config.auto_tau_stride;
  const GreedyResult pilot =
      Greedy(*dataset.exact, *dataset.cost,
             std::numeric_limits<double>::infinity(), options);
  std::vector<double> taus;
  for (std::size_t j = 1; j <= config.auto_tau_steps; ++j) {
    const std::size_t i = j * config.auto_tau_stride;
    if (i > pilot.trace.iterations.size()) break;
    const double value = pilot.trace.iterations[i - 1].value_after;
    if (value > 0.0) taus.push_back(value);
  }
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  return taus;
}

std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  const Dataset dataset = LoadDataset(config);
  std::vector<double> taus = config.tau;
  if (taus.empty()) taus = AutoTau(config, dataset);
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  std::vector<double> levels = config.eps_rel;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Context ctx{config, dataset, {}, RhoValues(config, *dataset.cost),
              config.gamma_grid.empty() ? DefaultGammaGrid() : config.gamma_grid,
              dataset.cost->MinSingleton(), dataset.cost->MaxSingleton()};
  std::sort(ctx.rho.begin(), ctx.rho.end());

  std::vector<Job> jobs;
  for (double tau : taus) jobs.push_back({tau, 0.0, {0.0}});
  if (dataset.graph) {
    if (config.shared_oracle) {
      ctx.sketches[levels.front()] = SketchFor(config, dataset, levels.front());
      for (double tau : taus) jobs.push_back({tau, levels.front(), levels});
    } else {
      for (double level : levels) {
        ctx.sketches[level] = SketchFor(config, dataset, level);
        for (double tau : taus) jobs.push_back({tau, level, {level}});
      }
    }
  }

  std::vector<std::vector<ExperimentRow>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        results[j] = RunJob(ctx, jobs[j]);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  const std::size_t num_threads = std::min(config.threads, jobs.size());
  if (num_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < num_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<ExperimentRow> rows;
  for (auto& part : results) {
    for (auto& row : part) rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ExperimentRow& a, const ExperimentRow& b) {
                     return std::tie(a.eps_rel, a.tau, a.rho) <
                            std::tie(b.eps_rel, b.tau, b.rho);
                   });
  return rows;
}

std::string ExperimentCsvHeader() {
  return "dataset,n,eps_rel,eps_abs,rho,tau,iters,cost_of_A,f_of_A,feasible,"
         "ratio1_valid,ratio1,ratio2_valid,ratio2_ub,gamma_star,mu_or_lb,"
         "alpha_or_ub,beta";
}

std::string ExperimentCsv(const std::vector<ExperimentRow>& rows) {
  std::string out = ExperimentCsvHeader() + "\r\n";
  for (const ExperimentRow& r : rows) {
    out += CsvField(r.dataset) + ',' + std::to_string(r.n) + ',' +
           FormatDouble(r.eps_rel) + ',' + FormatDouble(r.eps_abs) + ',' +
           FormatDouble(r.rho) + ',' + FormatDouble(r.tau) + ',' +
           std::to_string(r.iters) + ',' + FormatDouble(r.cost_of_a) + ',' +
           FormatDouble(r.f_of_a) + ',' + (r.feasible ? "1" : "0") + ',' +
           (r.ratio1_valid ? "1" : "0") + ',' + Opt(r.ratio1) + ',' +
           (r.ratio2_valid ? "1" : "0") + ',' + Opt(r.ratio2_ub) + ',' +
           Opt(r.gamma_star) + ',' + Opt(r.mu_or_lb) + ',' +
           Opt(r.alpha_or_ub) + ',' + Opt(r.beta) + "\r\n";
  }
  return out;
}

}  // namespace scsc
