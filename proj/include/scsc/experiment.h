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
// Experiment pipeline: dataset -> realizations -> sketches -> greedy sweep
//

#ifndef SCSC_EXPERIMENT_H_
#define SCSC_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scsc/cost.h"
#include "scsc/graph.h"
#include "scsc/oracle.h"
#include "scsc/sketch.h"

namespace scsc {

struct ExperimentConfig {
  // Edge-list path, "er:<n>:<p>" or "incomparability:<n>:<sigma>".
  std::string dataset;
  bool directed = true;
  double q = 0.5;
  std::size_t num_instances = 1000;
  std::uint64_t seed = 1;
  std::vector<double> eps_rel = {0.1};
  double c = 3.0;
  // Empty means auto: tau_j = f(A_{j * auto_tau_stride}) of an exact greedy run.
  std::vector<double> tau;
  std::size_t auto_tau_steps = 5;
  std::size_t auto_tau_stride = 1;
  // "normal", "unit", "file:<path>" or "concave:<p>".
  std::string cost = "normal";
  double cost_mean = 1.0;
  double cost_sd = 0.1;
  // Empty means the cost model's curvature.
  std::vector<double> rho;
  // Empty means {0.01, ..., 0.99}.
  std::vector<double> gamma_grid;
  bool exact_stats = true;
  // Run greedy once per tau with the smallest eps_rel sketch and evaluate the
  // certificates of every eps level on that run.
  bool shared_oracle = false;
  std::size_t threads = 1;
  std::string sketch_cache;
  std::string output = "-";
};

// Sets one key; throws std::invalid_argument on unknown keys or bad values.
void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value);

// "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> ParseKeyValueText(std::string_view text);

ExperimentConfig ConfigFromText(std::string_view text);

// Throws std::invalid_argument when a field is out of range.
void ValidateConfig(const ExperimentConfig& config);

// Everything the solvers need about one dataset.
struct Dataset {
  std::string name;
  std::size_t n = 0;
  std::shared_ptr<const Graph> graph;  // null for analytic datasets
  std::shared_ptr<const RealizationSet> realizations;
  OraclePtr exact;
  CostPtr cost;
  // Default threshold for analytic datasets.
  std::optional<double> natural_tau;
};

Dataset LoadDataset(const ExperimentConfig& config);

// Sketches for eps_rel at the config's c; loaded from / saved to the cache
// directory when one is configured.
std::shared_ptr<const ReachSketch> SketchFor(const ExperimentConfig& config,
                                             const Dataset& dataset,
                                             double eps_rel);

std::string SketchCachePath(const ExperimentConfig& config, std::size_t k);

struct ExperimentRow {
  std::string dataset;
  std::size_t n = 0;
  double eps_rel = 0.0;
  double eps_abs = 0.0;
  double rho = 1.0;
  double tau = 0.0;
  std::size_t iters = 0;
  double cost_of_a = 0.0;
  double f_of_a = 0.0;
  bool feasible = false;
  bool ratio1_valid = false;
  std::optional<double> ratio1;
  bool ratio2_valid = false;
  std::optional<double> ratio2_ub;
  std::optional<double> gamma_star;
  std::optional<double> mu_or_lb;
  std::optional<double> alpha_or_ub;
  std::optional<double> beta;
};

std::vector<double> AutoTau(const ExperimentConfig& config,
                            const Dataset& dataset);

// Exact baseline rows (eps_rel = 0) first, then (eps_rel, tau, rho) ascending.
std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config);

std::string ExperimentCsvHeader();
std::string ExperimentCsv(const std::vector<ExperimentRow>& rows);

}  // namespace scsc

#endif  // SCSC_EXPERIMENT_H_
