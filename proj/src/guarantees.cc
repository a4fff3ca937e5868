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


#include "scsc/guarantees.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "scsc/format.h"

namespace scsc {

namespace {

void CheckNonEmpty(const GreedyTrace& trace) {
  if (trace.iterations.empty()) throw std::invalid_argument("empty trace");
}

void CheckCommon(double eps, double rho, double c_min, double c_max,
                 double alpha) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  if (!(rho >= 1.0)) throw std::invalid_argument("rho must be >= 1");
  if (!(c_min > 0.0) || !(c_max >= c_min)) {
    throw std::invalid_argument("need 0 < c_min <= c_max");
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
}

RatioCertificate Inputs(int theorem, double eps, double rho, double c_min,
                        double c_max, double mu, double alpha) {
  RatioCertificate cert;
  cert.theorem = theorem;
  cert.eps = eps;
  cert.rho = rho;
  cert.c_min = c_min;
  cert.c_max = c_max;
  cert.mu = mu;
  cert.alpha = alpha;
  return cert;
}

double Threshold(double eps, double rho, double c_min, double c_max) {
  return 4.0 * eps * c_max * rho / c_min;
}

}  // namespace

TraceStats TraceStatsExact(const Oracle& f, const GreedyTrace& trace) {
  CheckNonEmpty(trace);
  const double tau = trace.tau;
  const std::size_t n = f.ground_set_size();
  TraceStats stats;
  stats.mode = StatsMode::kExact;
  stats.mu = std::numeric_limits<double>::infinity();
  double beta = std::numeric_limits<double>::infinity();
  std::vector<char> in_set(n, 0);
  std::vector<Vertex> prefix;
  std::vector<Vertex> candidates;
  double previous = 0.0;
  for (std::size_t i = 0; i <= trace.iterations.size(); ++i) {
    if (i > 0) {
      const Vertex x = trace.iterations[i - 1].element;
      prefix.push_back(x);
      in_set[x] = 1;
    }
    const double value = std::min(f.Query(prefix), tau);
    if (i > 0) stats.mu = std::min(stats.mu, value - previous);
    previous = value;
    candidates.clear();
    for (Vertex x = 0; x < n; ++x) {
      if (!in_set[x]) candidates.push_back(x);
    }
    if (candidates.empty()) continue;
    const std::vector<double> ext = f.QueryExtensions(prefix, candidates);
    if (i == 0) stats.alpha = *std::max_element(ext.begin(), ext.end());
    for (double v : ext) {
      const double gain = std::min(v, tau) - value;
      if (gain > 0.0) beta = std::min(beta, gain);
    }
  }
  if (!std::isfinite(beta)) {
    throw std::domain_error("no positive marginal gain; beta undefined");
  }
  stats.beta = beta;
  stats.usable = stats.mu > 0.0;
  return stats;
}

TraceStats TraceStatsBounds(const Oracle& F, const GreedyTrace& trace,
                            double eps) {
  CheckNonEmpty(trace);
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  const std::size_t n = F.ground_set_size();
  std::vector<Vertex> all(n);
  for (Vertex x = 0; x < n; ++x) all[x] = x;
  const std::vector<double> singles = F.QueryExtensions({}, all);
  TraceStats stats;
  stats.mode = StatsMode::kBounds;
  stats.alpha = *std::max_element(singles.begin(), singles.end()) + eps;
  double min_gain = std::numeric_limits<double>::infinity();
  for (const GreedyIteration& it : trace.iterations) {
    min_gain = std::min(min_gain, it.gain);
  }
  stats.mu = min_gain - 2.0 * eps;
  stats.usable = stats.mu > 0.0;
  return stats;
}

RatioCertificate RatioThm1(double eps, double rho, double c_min, double c_max,
                           double mu, double alpha, double beta) {
  CheckCommon(eps, rho, c_min, c_max, alpha);
  if (!(beta > 0.0) || !(alpha >= beta)) {
    throw std::invalid_argument("need 0 < beta <= alpha");
  }
  RatioCertificate cert = Inputs(1, eps, rho, c_min, c_max, mu, alpha);
  cert.beta = beta;
  if (!(mu > Threshold(eps, rho, c_min, c_max)) || !(mu > 0.0)) return cert;
  const double denom = 1.0 - 4.0 * eps * c_max * rho / (c_min * mu);
  if (!(denom > 0.0)) return cert;
  cert.valid = true;
  cert.value = rho / denom * (std::log(alpha / beta) + 2.0);
  return cert;
}

RatioCertificate RatioThm2(double eps, double rho, double c_min, double c_max,
                           double mu, double alpha, std::size_t n,
                           double gamma) {
  CheckCommon(eps, rho, c_min, c_max, alpha);
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  RatioCertificate cert = Inputs(2, eps, rho, c_min, c_max, mu, alpha);
  cert.gamma = gamma;
  cert.n = n;
  if (!(mu > Threshold(eps, rho, c_min, c_max)) || !(mu > 0.0)) return cert;
  const double frac = 4.0 * eps * c_max * rho / (c_min * mu);
  if (!(gamma > 0.0) || !(gamma < 1.0 - frac)) return cert;
  const double denom = 1.0 - frac - gamma;
  if (!(denom > 0.0)) return cert;
  cert.valid = true;
  cert.value = rho / denom *
               (std::log(static_cast<double>(n) * alpha * rho / (gamma * mu)) + 2.0);
  return cert;
}

RatioCertificate RatioEarlyExit(double eps, double rho, double c_min,
                                double c_max, double mu_star, double alpha,
                                double beta) {
  if (!(mu_star > 0.0)) throw std::invalid_argument("mu_star must be > 0");
  RatioCertificate cert =
      RatioThm1(eps, rho, c_min, c_max, mu_star - 2.0 * eps, alpha, beta);
  if (!(eps < mu_star / (4.0 * c_max * rho / c_min + 2.0))) {
    cert.valid = false;
    cert.value.reset();
  }
  return cert;
}

std::vector<double> DefaultGammaGrid() {
  std::vector<double> grid;
  for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);
  return grid;
}

RatioCertificate BestGamma(double eps, double rho, double c_min, double c_max,
                           double mu, double alpha, std::size_t n,
                           std::span<const double> grid) {
  std::vector<double> sorted(grid.begin(), grid.end());
  std::sort(sorted.begin(), sorted.end());
  std::optional<RatioCertificate> best;
  for (double gamma : sorted) {
    RatioCertificate cert = RatioThm2(eps, rho, c_min, c_max, mu, alpha, n, gamma);
    if (cert.valid && (!best || *cert.value < *best->value)) best = cert;
  }
  if (best) return *best;
  RatioCertificate cert = Inputs(2, eps, rho, c_min, c_max, mu, alpha);
  cert.n = n;
  return cert;
}

std::string CertificateCsvHeader() {
  return "theorem,valid,value,eps,rho,mu_or_lb,alpha_or_ub,beta,gamma_star,n";
}

std::string CertificateCsvRow(const RatioCertificate& cert) {
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string();
  };
  return std::to_string(cert.theorem) + ',' + (cert.valid ? "1" : "0") + ',' +
         opt(cert.value) + ',' + FormatDouble(cert.eps) + ',' +
         FormatDouble(cert.rho) + ',' + FormatDouble(cert.mu) + ',' +
         FormatDouble(cert.alpha) + ',' + opt(cert.beta) + ',' +
         (cert.valid ? opt(cert.gamma) : std::string()) + ',' +
         std::to_string(cert.n);
}

IncomparabilityOracle::IncomparabilityOracle(std::size_t n, double sigma)
    : n_(n), sigma_(sigma) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("sigma must be in (0, 1)");
  }
}

double IncomparabilityOracle::Query(std::span<const Vertex> set) const {
  bool clique = false;
  bool attached_in = false;
  bool isolated_in = false;
  for (Vertex v : set) {
    if (v >= n_) throw std::out_of_range("vertex outside ground set");
    if (v == attached()) {
      attached_in = true;
    } else if (v == isolated()) {
      isolated_in = true;
    } else {
      clique = true;
    }
  }
  const double extra = isolated_in ? 1.0 : 0.0;
  const double clique_size = static_cast<double>(n_ - 2);
  if (clique) return clique_size + (attached_in ? 1.0 : sigma_) + extra;
  if (attached_in) return 1.0 + sigma_ * clique_size + extra;
  return extra;
}

IncomparabilityInstance MakeIncomparabilityInstance(std::size_t n, double sigma) {
  auto f = std::make_shared<IncomparabilityOracle>(n, sigma);
  const Vertex covering[] = {0, f->isolated()};
  const double tau = f->Query(covering);
  return {f, MakeModularCost(std::vector<double>(n, 1.0)), tau};
}

std::pair<double, double> IncomparabilityRatios(std::size_t n, double sigma,
                                                double gamma) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("sigma must be in (0, 1)");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in (0, 1)");
  }
  const double a = static_cast<double>(n) - 2.0 + sigma;
  const double r1 = std::log(a / (1.0 - sigma)) + 2.0;
  const double r2 =
      std::log(static_cast<double>(n) * a / gamma) / (1.0 - gamma) + 2.0;
  return {r1, r2};
}

}  // namespace scsc
