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
// Trace statistics and approximation-ratio certificates
//

#ifndef SCSC_GUARANTEES_H_
#define SCSC_GUARANTEES_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scsc/cost.h"
#include "scsc/greedy.h"
#include "scsc/oracle.h"

namespace scsc {

enum class StatsMode { kExact, kBounds };

struct TraceStats {
  StatsMode mode = StatsMode::kExact;
  // Exact: alpha = max_x f({x}). Bounds: an upper bound on it.
  double alpha = 0.0;
  // Exact: mu = min_i f_tau(A_i) - f_tau(A_{i-1}). Bounds: a lower bound.
  double mu = 0.0;
  // min positive Delta f_tau(A_i, x) over i = 0..k and all x. Exact mode only.
  std::optional<double> beta;
  // False when a bound is useless (mu lower bound <= 0).
  bool usable = true;
};

// Queries f on every (A_i, x) pair of the trace. Throws std::domain_error when
// no marginal is positive.
TraceStats TraceStatsExact(const Oracle& f, const GreedyTrace& trace);

// Bounds from F alone, given |F - f| <= eps:
//   alpha_ub = max_x F({x}) + eps,  mu_lb = min_i gain_i - 2 eps.
TraceStats TraceStatsBounds(const Oracle& F, const GreedyTrace& trace,
                            double eps);

struct RatioCertificate {
  int theorem = 1;
  bool valid = false;
  // Set only when valid.
  std::optional<double> value;
  double eps = 0.0;
  double rho = 1.0;
  double c_min = 1.0;
  double c_max = 1.0;
  double mu = 0.0;
  double alpha = 0.0;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::size_t n = 0;
};

// rho / (1 - 4 eps c_max rho / (c_min mu)) * (ln(alpha / beta) + 2),
// valid iff mu > 4 eps c_max rho / c_min.
RatioCertificate RatioThm1(double eps, double rho, double c_min, double c_max,
                           double mu, double alpha, double beta);

// rho / (1 - 4 eps c_max rho / (c_min mu) - gamma) * (ln(n alpha rho / (gamma mu)) + 2),
// valid iff mu > 4 eps c_max rho / c_min and 0 < gamma < 1 - 4 eps c_max rho / (c_min mu).
RatioCertificate RatioThm2(double eps, double rho, double c_min, double c_max,
                           double mu, double alpha, std::size_t n, double gamma);

// Ratio for the early-exit greedy: RatioThm1 with mu replaced by mu_star - 2 eps,
// valid iff eps < mu_star / (4 c_max rho / c_min + 2).
RatioCertificate RatioEarlyExit(double eps, double rho, double c_min,
                                double c_max, double mu_star, double alpha,
                                double beta);

// {0.01, 0.02, ..., 0.99}.
std::vector<double> DefaultGammaGrid();

// Smallest valid RatioThm2 over the grid; ties go to the smaller gamma.
// Invalid certificate when no grid point is valid.
RatioCertificate BestGamma(double eps, double rho, double c_min, double c_max,
                           double mu, double alpha, std::size_t n,
                           std::span<const double> grid);

// theorem,valid,value,eps,rho,mu_or_lb,alpha_or_ub,beta,gamma_star,n
std::string CertificateCsvHeader();
std::string CertificateCsvRow(const RatioCertificate& cert);

// Influence on an undirected graph with n vertices: a clique on 0..n-3 with
// unit edge weights, vertex n-2 joined to the clique by edges of weight sigma,
// and the isolated vertex n-1.
class IncomparabilityOracle : public Oracle {
 public:
  IncomparabilityOracle(std::size_t n, double sigma);

  std::size_t ground_set_size() const override { return n_; }
  double Query(std::span<const Vertex> set) const override;
  bool declares_submodular() const override { return true; }

  Vertex attached() const { return static_cast<Vertex>(n_ - 2); }
  Vertex isolated() const { return static_cast<Vertex>(n_ - 1); }

 private:
  std::size_t n_;
  double sigma_;
};

struct IncomparabilityInstance {
  std::shared_ptr<const IncomparabilityOracle> f;
  CostPtr cost;  // cardinality
  double tau;    // n - 1 + sigma
};

IncomparabilityInstance MakeIncomparabilityInstance(std::size_t n, double sigma);

// (ln((n-2+sigma)/(1-sigma)) + 2, ln(n(n-2+sigma)/gamma)/(1-gamma) + 2).
std::pair<double, double> IncomparabilityRatios(std::size_t n, double sigma,
                                                double gamma);

}  // namespace scsc

#endif  // SCSC_GUARANTEES_H_
