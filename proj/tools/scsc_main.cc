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


// scsc: submodular cover with approximate oracles.
//
//   scsc solve      --dataset=<spec> --tau=<t> [--eps_rel=<e>] ...
//   scsc experiment [--config=<file>] [--<key>=<value> ...]
//   scsc sketch build   --dataset=<spec> --eps_rel=<e> --out=<path>
//   scsc sketch inspect <path>
//   scsc verify     [--trials=<n>] [--seed=<s>]
//
// Exit status: 0 success, 2 infeasible, 1 error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "scsc/experiment.h"
#include "scsc/format.h"
#include "scsc/greedy.h"
#include "scsc/sketch.h"
#include "verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

const char* const kConfigKeys[] = {
    "dataset",        "directed",  "q",          "N",          "seed",
    "eps_rel",        "c",         "tau",        "auto_tau_steps",
    "auto_tau_stride", "cost",     "cost_mean",  "cost_sd",    "rho",
    "gamma_grid",     "exact_stats", "shared_oracle", "threads",
    "sketch_cache",   "output",
};

// Registers --<key> for every config key; values are applied after --config.
void AddConfigFlags(CLI::App* app, std::map<std::string, std::string>& values) {
  for (const char* key : kConfigKeys) {
    app->add_option(std::string("--") + key, values[key]);
  }
}

scsc::ExperimentConfig BuildConfig(const CLI::App* app,
                                   const std::string& config_path,
                                   const std::map<std::string, std::string>& flags) {
  scsc::ExperimentConfig config;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open " + config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    config = scsc::ConfigFromText(buffer.str());
  }
  for (const auto& [key, value] : flags) {
    if (app->count("--" + key) > 0) scsc::SetConfigValue(config, key, value);
  }
  return config;
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int Solve(const CLI::App* app, const std::string& config_path,
          const std::map<std::string, std::string>& flags, double eps_rel,
          double early_exit, bool translated, bool lazy,
          const std::string& trace_path) {
  scsc::ExperimentConfig config = BuildConfig(app, config_path, flags);
  if (config.tau.size() > 1) throw std::invalid_argument("solve takes one tau");
  const scsc::Dataset dataset = scsc::LoadDataset(config);
  const double tau = config.tau.empty()
                         ? dataset.natural_tau.value_or(0.0)
                         : config.tau.front();
  if (!(tau > 0.0)) throw std::invalid_argument("--tau is required");
  scsc::OraclePtr oracle = dataset.exact;
  double eps_abs = 0.0;
  if (eps_rel > 0.0) {
    eps_abs = scsc::RelToAbsEps(eps_rel, tau);
    oracle = std::make_shared<scsc::SketchOracle>(
        scsc::SketchFor(config, dataset, eps_rel), eps_abs);
  }
  scsc::GreedyResult result;
  if (early_exit > 0.0) {
    result = scsc::GreedyEarlyExit(*oracle, *dataset.cost, tau, early_exit);
  } else if (translated) {
    result = scsc::RunTranslated(*oracle, *dataset.cost, tau, eps_abs);
  } else {
    scsc::GreedyOptions options;
    options.lazy = lazy;
    result = scsc::Greedy(*oracle, *dataset.cost, tau, options);
  }
  std::span<const std::int64_t> ids;
  if (dataset.graph) ids = dataset.graph->original_ids();
  if (!trace_path.empty()) WriteOutput(trace_path, scsc::TraceToCsv(result.trace, ids));
  std::cout << "status " << scsc::StatusName(result.trace.status) << '\n'
            << "size " << result.solution.size() << '\n'
            << "cost " << scsc::FormatDouble(dataset.cost->Eval(result.solution)) << '\n'
            << "F " << scsc::FormatDouble(result.trace.final_value) << '\n'
            << "f " << scsc::FormatDouble(dataset.exact->Query(result.solution)) << '\n'
            << "set";
  for (scsc::Vertex v : result.solution) {
    std::cout << ' ' << (dataset.graph ? dataset.graph->OriginalId(v) : v);
  }
  std::cout << '\n';
  return result.trace.status == scsc::GreedyStatus::kExhaustedGroundSet
             ? kExitInfeasible
             : kExitOk;
}

int Run(int argc, char** argv) {
  CLI::App app{"Submodular cover with approximate value oracles"};
  app.require_subcommand(1);

  std::map<std::string, std::string> solve_flags;
  std::string solve_config;
  double solve_eps = 0.0;
  double early_exit = 0.0;
  bool translated = false;
  bool lazy = false;
  std::string trace_path;
  CLI::App* solve = app.add_subcommand("solve", "Run greedy once");
  solve->add_option("--config", solve_config, "key=value config file");
  AddConfigFlags(solve, solve_flags);
  solve->remove_option(solve->get_option("--eps_rel"));
  solve->add_option("--eps_rel", solve_eps, "sketch error level; 0 = exact oracle");
  solve->add_option("--early_exit", early_exit, "stop when a gain is <= this");
  solve->add_flag("--translated", translated, "run against tau - eps_abs");
  solve->add_flag("--lazy", lazy, "lazy evaluation (exact oracle only)");
  solve->add_option("--trace", trace_path, "write the iteration trace CSV");

  std::map<std::string, std::string> exp_flags;
  std::string exp_config;
  CLI::App* experiment = app.add_subcommand("experiment", "Run a parameter grid");
  experiment->add_option("--config", exp_config, "key=value config file");
  AddConfigFlags(experiment, exp_flags);

  CLI::App* sketch = app.add_subcommand("sketch", "Build or inspect sketches");
  sketch->require_subcommand(1);
  std::map<std::string, std::string> sketch_flags;
  std::string sketch_config;
  double sketch_eps = 0.0;
  std::string sketch_out;
  CLI::App* build = sketch->add_subcommand("build", "Build and save a sketch");
  build->add_option("--config", sketch_config, "key=value config file");
  AddConfigFlags(build, sketch_flags);
  build->remove_option(build->get_option("--eps_rel"));
  build->add_option("--eps_rel", sketch_eps, "relative error level")->required();
  build->add_option("--out", sketch_out, "output path")->required();
  std::string inspect_path;
  CLI::App* inspect = sketch->add_subcommand("inspect", "Print sketch metadata");
  inspect->add_option("path", inspect_path)->required();

  std::size_t trials = 200;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Brute-force checks");
  verify->add_option("--trials", trials);
  verify->add_option("--seed", verify_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (solve->parsed()) {
    return Solve(solve, solve_config, solve_flags, solve_eps, early_exit,
                 translated, lazy, trace_path);
  }
  if (experiment->parsed()) {
    const scsc::ExperimentConfig config =
        BuildConfig(experiment, exp_config, exp_flags);
    const std::string csv = scsc::ExperimentCsv(scsc::RunExperiment(config));
    WriteOutput(config.output, csv);
    return kExitOk;
  }
  if (build->parsed()) {
    const scsc::ExperimentConfig config =
        BuildConfig(build, sketch_config, sketch_flags);
    const scsc::Dataset dataset = scsc::LoadDataset(config);
    scsc::ExperimentConfig no_cache = config;
    no_cache.sketch_cache.clear();
    scsc::SaveSketch(*scsc::SketchFor(no_cache, dataset, sketch_eps), sketch_out);
    return kExitOk;
  }
  if (inspect->parsed()) {
    const scsc::ReachSketch s = scsc::LoadSketch(inspect_path);
    std::size_t total = 0;
    for (scsc::Vertex u = 0; u < s.num_vertices(); ++u) total += s.Of(u).size();
    std::cout << "n " << s.num_vertices() << "\nk " << s.k() << "\nN "
              << s.num_instances() << "\nseed " << s.seed() << "\nentries "
              << total << '\n';
    return kExitOk;
  }
  if (verify->parsed()) {
    return scsc::RunVerifySuite(trials, verify_seed, std::cout) ? kExitOk
                                                                : kExitError;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
}
