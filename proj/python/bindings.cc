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


#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "scsc/bruteforce.h"
#include "scsc/cost.h"
#include "scsc/experiment.h"
#include "scsc/graph.h"
#include "scsc/greedy.h"
#include "scsc/guarantees.h"
#include "scsc/oracle.h"
#include "scsc/sketch.h"

namespace py = pybind11;

namespace scsc {
namespace {

using VertexList = std::vector<Vertex>;
using PyOracle = std::shared_ptr<Oracle>;
using PyCost = std::shared_ptr<CostModel>;

// Python holders are non-const; the library hands out const pointers.
PyOracle Held(OraclePtr p) { return std::const_pointer_cast<Oracle>(std::move(p)); }
PyCost Held(CostPtr p) { return std::const_pointer_cast<CostModel>(std::move(p)); }

PyOracle PyFunctionOracle(std::size_t n, py::function fn, double eps_abs,
                          bool submodular) {
  auto shared = std::make_shared<py::function>(std::move(fn));
  return std::make_shared<FunctionOracle>(
      n,
      [shared](std::span<const Vertex> set) {
        py::gil_scoped_acquire gil;
        return (*shared)(VertexList(set.begin(), set.end())).cast<double>();
      },
      eps_abs, submodular);
}

py::dict StatsDict(const TraceStats& s) {
  py::dict d;
  d["mode"] = s.mode == StatsMode::kExact ? "exact" : "bounds";
  d["alpha"] = s.alpha;
  d["mu"] = s.mu;
  d["beta"] = s.beta ? py::cast(*s.beta) : py::none();
  d["usable"] = s.usable;
  return d;
}

ExperimentConfig ConfigFromDict(const py::dict& values) {
  ExperimentConfig config;
  for (const auto& [key, value] : values) {
    SetConfigValue(config, py::str(key).cast<std::string>(),
                   py::str(value).cast<std::string>());
  }
  return config;
}

}  // namespace
}  // namespace scsc

PYBIND11_MODULE(_core, m) {
  using namespace scsc;
  m.doc() = "Submodular cover with approximate oracles.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SketchFormatError>(m, "SketchFormatError", PyExc_ValueError);

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &Graph::EdgeList)
      .def("probabilities", [](const Graph& g) {
        return std::vector<double>(g.probabilities().begin(), g.probabilities().end());
      })
      .def("original_id", &Graph::OriginalId)
      .def("with_uniform_probability", &Graph::WithUniformProbability)
      .def("with_weighted_cascade",
           [](const Graph& g, double q) { return WeightedCascadeProbabilities(g, q); },
           py::arg("q"));
  m.def("load_edge_list", &LoadEdgeList, py::arg("text"), py::arg("undirected") = false);
  m.def("load_edge_list_file", &LoadEdgeListFile, py::arg("path"),
        py::arg("undirected") = false);
  m.def("erdos_renyi", &ErdosRenyiGraph, py::arg("n"), py::arg("p"), py::arg("seed"));

  py::class_<RealizationSet, std::shared_ptr<RealizationSet>>(m, "RealizationSet")
      .def_property_readonly("num_instances", &RealizationSet::num_instances)
      .def("alive", &RealizationSet::Alive)
      .def("count_alive", &RealizationSet::CountAlive);
  m.def("sample_realizations", &SampleRealizations, py::arg("graph"),
        py::arg("num_instances"), py::arg("seed"));

  py::class_<Oracle, std::shared_ptr<Oracle>>(m, "Oracle")
      .def_property_readonly("ground_set_size", &Oracle::ground_set_size)
      .def_property_readonly("eps_abs", &Oracle::eps_abs)
      .def("__call__",
           [](const Oracle& o, const VertexList& set) { return o.Query(set); })
      .def("query_extensions",
           [](const Oracle& o, const VertexList& base, const VertexList& cands) {
             return o.QueryExtensions(base, cands);
           });
  m.def(
      "exact_oracle",
      [](const Graph& g, const RealizationSet& r) -> PyOracle {
        return Held(MakeExactReachabilityOracle(g, r));
      },
      py::arg("graph"), py::arg("realizations"));
  m.def(
      "sketch_oracle",
      [](const Graph& g, const RealizationSet& r, std::uint64_t rank_seed,
         std::size_t k, double eps_abs) -> PyOracle {
        const RankAssignment ranks(g.num_vertices(), r.num_instances(), rank_seed);
        return std::make_shared<SketchOracle>(
            std::make_shared<const ReachSketch>(BuildSketches(g, r, ranks, k)), eps_abs);
      },
      py::arg("graph"), py::arg("realizations"), py::arg("rank_seed"), py::arg("k"),
      py::arg("eps_abs") = 0.0);
  m.def(
      "noisy_oracle",
      [](PyOracle exact, double eps, std::uint64_t seed, bool adversarial) -> PyOracle {
        return std::make_shared<NoisyOracle>(
            std::move(exact), eps, seed,
            adversarial ? NoiseMode::kAdversarialAlternating : NoiseMode::kUniform);
      },
      py::arg("exact"), py::arg("eps"), py::arg("seed"), py::arg("adversarial") = false);
  m.def(
      "coverage_oracle",
      [](std::vector<std::vector<std::uint32_t>> covers, std::vector<double> weights)
          -> PyOracle {
        return std::make_shared<WeightedCoverageOracle>(std::move(covers),
                                                        std::move(weights));
      },
      py::arg("covers"), py::arg("weights"));
  m.def("function_oracle", &PyFunctionOracle, py::arg("n"), py::arg("fn"),
        py::arg("eps_abs") = 0.0, py::arg("submodular") = false);
  m.def("sketch_size_for", &SketchSizeFor, py::arg("eps_rel"), py::arg("n"),
        py::arg("c") = 3.0);

  py::class_<CostModel, std::shared_ptr<CostModel>>(m, "CostModel")
      .def("__call__", [](const CostModel& c, const VertexList& set) { return c.Eval(set); })
      .def("singleton", &CostModel::Singleton)
      .def_property_readonly("c_min", &CostModel::MinSingleton)
      .def_property_readonly("c_max", &CostModel::MaxSingleton)
      .def("curvature", [](const CostModel& c) -> double {
        if (auto r = c.declared_curvature()) return *r;
        VertexList all(c.size());
        for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
        return CurvatureBruteForce(c, all);
      });
  m.def(
      "modular_cost", [](std::vector<double> c) { return Held(MakeModularCost(std::move(c))); },
      py::arg("costs"));
  m.def(
      "concave_cost",
      [](std::vector<double> c, double p) {
        return Held(MakeConcaveCardinalityCost(std::move(c), p));
      },
      py::arg("costs"), py::arg("exponent"));
  m.def("sample_normal_costs", &SampleNormalCosts, py::arg("n"), py::arg("mean"),
        py::arg("sd"), py::arg("seed"));

  py::class_<GreedyIteration>(m, "GreedyIteration")
      .def_readonly("element", &GreedyIteration::element)
      .def_readonly("value_before", &GreedyIteration::value_before)
      .def_readonly("value_after", &GreedyIteration::value_after)
      .def_readonly("gain", &GreedyIteration::gain)
      .def_readonly("cost", &GreedyIteration::cost);
  py::class_<GreedyTrace>(m, "GreedyTrace")
      .def_readonly("tau", &GreedyTrace::tau)
      .def_readonly("iterations", &GreedyTrace::iterations)
      .def_readonly("final_value", &GreedyTrace::final_value)
      .def_property_readonly("status",
                             [](const GreedyTrace& t) { return StatusName(t.status); })
      .def("to_csv", [](const GreedyTrace& t) { return TraceToCsv(t); });
  m.def(
      "greedy",
      [](const Oracle& F, const CostModel& c, double tau, bool lazy,
         std::optional<double> early_exit_gain) {
        GreedyOptions options;
        options.lazy = lazy;
        options.early_exit_gain = early_exit_gain;
        const GreedyResult r = Greedy(F, c, tau, options);
        return py::make_tuple(r.solution, r.trace);
      },
      py::arg("oracle"), py::arg("cost"), py::arg("tau"), py::arg("lazy") = false,
      py::arg("early_exit_gain") = py::none());
  m.def(
      "run_translated",
      [](const Oracle& F, const CostModel& c, double tau, double eps) {
        const GreedyResult r = RunTranslated(F, c, tau, eps);
        return py::make_tuple(r.solution, r.trace);
      },
      py::arg("oracle"), py::arg("cost"), py::arg("tau"), py::arg("eps"));

  m.def(
      "trace_stats_exact",
      [](const Oracle& f, const GreedyTrace& t) { return StatsDict(TraceStatsExact(f, t)); },
      py::arg("f"), py::arg("trace"));
  m.def(
      "trace_stats_bounds",
      [](const Oracle& F, const GreedyTrace& t, double eps) {
        return StatsDict(TraceStatsBounds(F, t, eps));
      },
      py::arg("F"), py::arg("trace"), py::arg("eps"));

  py::class_<RatioCertificate>(m, "RatioCertificate")
      .def_readonly("theorem", &RatioCertificate::theorem)
      .def_readonly("valid", &RatioCertificate::valid)
      .def_readonly("value", &RatioCertificate::value)
      .def_readonly("gamma", &RatioCertificate::gamma)
      .def("csv_row", [](const RatioCertificate& c) { return CertificateCsvRow(c); });
  m.def("ratio_thm1", &RatioThm1, py::arg("eps"), py::arg("rho"), py::arg("c_min"),
        py::arg("c_max"), py::arg("mu"), py::arg("alpha"), py::arg("beta"));
  m.def("ratio_thm2", &RatioThm2, py::arg("eps"), py::arg("rho"), py::arg("c_min"),
        py::arg("c_max"), py::arg("mu"), py::arg("alpha"), py::arg("n"), py::arg("gamma"));
  m.def("ratio_early_exit", &RatioEarlyExit, py::arg("eps"), py::arg("rho"),
        py::arg("c_min"), py::arg("c_max"), py::arg("mu_star"), py::arg("alpha"),
        py::arg("beta"));
  m.def(
      "best_gamma",
      [](double eps, double rho, double c_min, double c_max, double mu, double alpha,
         std::size_t n, std::optional<std::vector<double>> grid) {
        const std::vector<double> g = grid ? *grid : DefaultGammaGrid();
        return BestGamma(eps, rho, c_min, c_max, mu, alpha, n, g);
      },
      py::arg("eps"), py::arg("rho"), py::arg("c_min"), py::arg("c_max"), py::arg("mu"),
      py::arg("alpha"), py::arg("n"), py::arg("grid") = py::none());
  m.def(
      "make_incomparability_instance",
      [](std::size_t n, double sigma) {
        const IncomparabilityInstance inst = MakeIncomparabilityInstance(n, sigma);
        return py::make_tuple(Held(inst.f), Held(inst.cost), inst.tau);
      },
      py::arg("n"), py::arg("sigma"));
  m.def("incomparability_ratios", &IncomparabilityRatios, py::arg("n"),
        py::arg("sigma"), py::arg("gamma"));

  m.def(
      "optimal_cover",
      [](const Oracle& f, const CostModel& c, double tau) {
        const CoverResult r = OptimalCover(f, c, tau);
        return py::make_tuple(r.feasible, r.set, r.cost);
      },
      py::arg("f"), py::arg("cost"), py::arg("tau"));
  m.def(
      "check_submodular",
      [](const Oracle& F, std::size_t limit) {
        py::list out;
        for (const SubmodularViolation& v : CheckSubmodular(F, limit)) {
          out.append(py::make_tuple(v.a, v.b, v.x, v.gain_a, v.gain_b));
        }
        return out;
      },
      py::arg("F"), py::arg("limit") = 16);

  m.def(
      "run_experiment",
      [](const py::dict& config) {
        const ExperimentConfig c = ConfigFromDict(config);
        std::vector<ExperimentRow> rows;
        {
          py::gil_scoped_release release;
          rows = RunExperiment(c);
        }
        return ExperimentCsv(rows);
      },
      py::arg("config"),
      "Runs an experiment from config keys and returns the CSV text.");
}
