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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "scsc/experiment.h"

namespace scsc {
namespace {

TEST(ConfigTest, ParsesKeyValueText) {
  const ExperimentConfig c = ConfigFromText(
      "# comment\n"
      "dataset = er:50:0.05\n"
      "directed=false\n"
      "N = 40   # trailing\n"
      "eps_rel = 0.1, 0.2\n"
      "tau = auto\n"
      "rho = 1,2\n"
      "gamma_grid = default\n"
      "shared_oracle = yes\n");
  EXPECT_EQ(c.dataset, "er:50:0.05");
  EXPECT_FALSE(c.directed);
  EXPECT_EQ(c.num_instances, 40u);
  EXPECT_EQ(c.eps_rel, (std::vector<double>{0.1, 0.2}));
  EXPECT_TRUE(c.tau.empty());
  EXPECT_EQ(c.rho, (std::vector<double>{1, 2}));
  EXPECT_TRUE(c.gamma_grid.empty());
  EXPECT_TRUE(c.shared_oracle);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(ConfigFromText("bogus = 1\n"), std::invalid_argument);
  EXPECT_THROW(ConfigFromText("q = abc\n"), std::invalid_argument);
  EXPECT_THROW(ConfigFromText("no equals sign\n"), ParseError);
  ExperimentConfig c;
  EXPECT_THROW(ValidateConfig(c), std::invalid_argument);
  c.dataset = "er:10:0.1";
  ValidateConfig(c);
  c.q = 0.0;
  EXPECT_THROW(ValidateConfig(c), std::invalid_argument);
  c.q = 0.5;
  c.c = 2.0;
  EXPECT_THROW(ValidateConfig(c), std::invalid_argument);
  c.c = 3.0;
  c.eps_rel.clear();
  EXPECT_THROW(ValidateConfig(c), std::invalid_argument);
}

TEST(ExperimentTest, IncomparabilityBaselineRow) {
  ExperimentConfig c;
  c.dataset = "incomparability:10:0.5";
  const std::vector<ExperimentRow> rows = RunExperiment(c);
  ASSERT_EQ(rows.size(), 1u);
  const ExperimentRow& r = rows[0];
  EXPECT_EQ(r.eps_rel, 0.0);
  EXPECT_EQ(r.tau, 9.5);
  EXPECT_EQ(r.iters, 2u);
  EXPECT_EQ(r.cost_of_a, 2.0);
  EXPECT_TRUE(r.feasible);
  EXPECT_TRUE(r.ratio1_valid);
  EXPECT_NEAR(*r.ratio1, std::log(17.0) + 2.0, 1e-12);
  EXPECT_EQ(*r.alpha_or_ub, 8.5);
  EXPECT_EQ(*r.mu_or_lb, 1.0);
  EXPECT_EQ(*r.beta, 0.5);
  EXPECT_TRUE(r.ratio2_valid);
  EXPECT_EQ(*r.gamma_star, 0.10);
}

ExperimentConfig SmallGraphConfig() {
  ExperimentConfig c;
  c.dataset = "er:60:0.05";
  c.num_instances = 40;
  c.seed = 3;
  c.eps_rel = {0.3, 0.2};
  c.auto_tau_steps = 3;
  c.rho = {2.0, 1.0};
  return c;
}

TEST(ExperimentTest, RowsAreSortedAndComplete) {
  const std::vector<ExperimentRow> rows = RunExperiment(SmallGraphConfig());
  // (1 baseline + 2 eps levels) x 3 tau x 2 rho.
  ASSERT_EQ(rows.size(), 18u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(rows[i].eps_rel, 0.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    EXPECT_TRUE(std::tie(a.eps_rel, a.tau, a.rho) < std::tie(b.eps_rel, b.tau, b.rho));
  }
  for (const ExperimentRow& r : rows) {
    if (r.eps_rel == 0.0 && r.ratio1_valid) {
      EXPECT_EQ(*r.ratio1, r.rho * (std::log(*r.alpha_or_ub / *r.beta) + 2.0));
    }
    if (r.ratio1_valid) EXPECT_GE(*r.ratio1, 2.0 * r.rho);
    EXPECT_EQ(r.eps_abs, r.eps_rel * r.tau);
    EXPECT_EQ(r.feasible, r.f_of_a >= r.tau - r.eps_abs);
  }
}

TEST(ExperimentTest, DeterministicCsv) {
  const ExperimentConfig c = SmallGraphConfig();
  const std::string a = ExperimentCsv(RunExperiment(c));
  ExperimentConfig threaded = c;
  threaded.threads = 3;
  EXPECT_EQ(a, ExperimentCsv(RunExperiment(c)));
  EXPECT_EQ(a, ExperimentCsv(RunExperiment(threaded)));
  EXPECT_EQ(a.substr(0, a.find('\r')), ExperimentCsvHeader());
}

TEST(ExperimentTest, SharedOracleRatiosGrowWithEps) {
  ExperimentConfig c = SmallGraphConfig();
  c.shared_oracle = true;
  c.eps_rel = {0.001, 0.002, 0.004};
  c.rho = {1.0};
  const std::vector<ExperimentRow> rows = RunExperiment(c);
  for (const ExperimentRow& a : rows) {
    for (const ExperimentRow& b : rows) {
      if (a.tau == b.tau && a.eps_rel > 0 && a.eps_rel < b.eps_rel &&
          a.ratio2_valid && b.ratio2_valid) {
        EXPECT_LE(*a.ratio2_ub, *b.ratio2_ub);
      }
      if (a.tau == b.tau && a.eps_rel > 0 && a.eps_rel < b.eps_rel && b.ratio2_valid) {
        EXPECT_TRUE(a.ratio2_valid);
      }
    }
  }
}

TEST(ExperimentTest, SketchCacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "scsc_cache_test";
  std::filesystem::remove_all(dir);
  ExperimentConfig c = SmallGraphConfig();
  c.sketch_cache = dir.string();
  const Dataset ds = LoadDataset(c);
  const auto built = SketchFor(c, ds, 0.3);
  const std::string path = SketchCachePath(c, built->k());
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto loaded = SketchFor(c, ds, 0.3);
  EXPECT_TRUE(*loaded == *built);
  EXPECT_EQ(SerializeSketch(*loaded), SerializeSketch(LoadSketch(path)));
  EXPECT_EQ(ExperimentCsv(RunExperiment(c)), ExperimentCsv(RunExperiment(SmallGraphConfig())));
  std::filesystem::remove_all(dir);
}

TEST(ExperimentTest, CostSpecs) {
  ExperimentConfig c = SmallGraphConfig();
  c.cost = "unit";
  EXPECT_EQ(LoadDataset(c).cost->MaxSingleton(), 1.0);
  c.cost = "concave:0.5";
  EXPECT_FALSE(LoadDataset(c).cost->declared_curvature().has_value());
  c.rho.clear();
  EXPECT_THROW(RunExperiment(c), std::invalid_argument);
  c.cost = "bogus";
  EXPECT_THROW(LoadDataset(c), std::invalid_argument);
}

}  // namespace
}  // namespace scsc
