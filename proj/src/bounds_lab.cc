// Copyright 2026 The sbmsdp Authors.
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

#include "sbmsdp/bounds_lab.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sbmsdp/degree_stats.h"
#include "sbmsdp/dual_certificate.h"
#include "sbmsdp/errors.h"
#include "sbmsdp/random.h"
#include "sbmsdp/sdp_engine.h"

namespace sbmsdp {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw DomainError(message);
}

std::vector<double> binomial_pmf(int n, double p) {
  std::vector<double> pmf(n + 1);
  double coeff = 1.0;
  for (int j = 0; j <= n; ++j) {
    pmf[j] = coeff * std::pow(p, j) * std::pow(1.0 - p, n - j);
    coeff = coeff * (n - j) / (j + 1);
  }
  return pmf;
}

}  // namespace

double chernoff_upper(double mu, double delta) {
  require(mu >= 0.0 && delta >= 0.0, "chernoff_upper needs mu >= 0, delta >= 0");
  return std::exp(mu * (delta - (1.0 + delta) * std::log1p(delta)));
}

double chernoff_lower(double mu, double delta) {
  require(mu >= 0.0 && delta >= 0.0 && delta <= 1.0,
          "chernoff_lower needs mu >= 0 and 0 <= delta <= 1");
  // (1 - delta) ln(1 - delta) -> 0 as delta -> 1.
  const double tail = delta < 1.0 ? (1.0 - delta) * std::log1p(-delta) : 0.0;
  return std::exp(mu * (-delta - tail));
}

double chernoff_simplified_upper(double mu, double delta) {
  require(mu >= 0.0 && delta >= 0.0 && delta <= 1.0,
          "simplified Chernoff needs mu >= 0 and 0 <= delta <= 1");
  return std::exp(-delta * delta * mu / 3.0);
}

double chernoff_simplified_lower(double mu, double delta) {
  require(mu >= 0.0 && delta >= 0.0 && delta <= 1.0,
          "simplified Chernoff needs mu >= 0 and 0 <= delta <= 1");
  return std::exp(-delta * delta * mu / 2.0);
}

double bernstein_tail(double t, double sigma_sq_sum, double range) {
  require(t >= 0.0 && sigma_sq_sum >= 0.0 && range >= 0.0,
          "bernstein_tail needs t, variance sum and range >= 0");
  const double denom = sigma_sq_sum + range * t / 3.0;
  if (denom == 0.0) return t > 0.0 ? 0.0 : 1.0;
  return std::exp(-0.5 * t * t / denom);
}

double hoeffding_tail(double t, std::span<const std::pair<double, double>> ranges) {
  require(t >= 0.0 && !ranges.empty(), "hoeffding_tail needs t >= 0 and n >= 1");
  double width_sq = 0.0;
  for (const auto& [lo, hi] : ranges) {
    require(hi >= lo, "hoeffding_tail interval has b < a");
    width_sq += (hi - lo) * (hi - lo);
  }
  const double n = static_cast<double>(ranges.size());
  if (width_sq == 0.0) return t > 0.0 ? 0.0 : 2.0;
  return 2.0 * std::exp(-2.0 * n * n * t * t / width_sq);
}

CorollaryBound corollary_bound(int n, double p, double alpha_c, double r) {
  require(n >= 1 && p >= 0.0 && p <= 1.0 && alpha_c >= 0.0 && r >= 1.0,
          "corollary_bound needs n >= 1, p in [0, 1], alpha >= 0, r >= 1");
  const double log_r = std::log(r);
  const double sigma = std::sqrt(p * (1.0 - p));
  return {n * p + alpha_c * sigma * std::sqrt(n * log_r) + alpha_c * log_r,
          std::exp(-alpha_c * log_r / 4.0)};
}

double t_statistic_exact(int m, double p, double q, double delta) {
  require(m >= 1 && p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0,
          "T(m, p, q, delta) needs m >= 1 and p, q in [0, 1]");
  const std::vector<double> w = binomial_pmf(m, p);
  const std::vector<double> z = binomial_pmf(m, q);
  double total = 0.0;
  for (int zi = 0; zi <= m; ++zi) {
    for (int wi = 0; wi <= m; ++wi) {
      if (zi - wi >= delta) total += z[zi] * w[wi];
    }
  }
  return std::min(total, 1.0);
}

MonteCarloEstimate t_statistic_mc(int m, double p, double q, double delta,
                                  long long trials, std::uint64_t seed) {
  require(m >= 1 && trials >= 1 && p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0,
          "t_statistic_mc needs m >= 1, trials >= 1 and p, q in [0, 1]");
  constexpr long long kBlock = 4096;
  long long hits = 0;
  for (long long start = 0, block = 0; start < trials; start += kBlock, ++block) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(block)));
    const long long end = std::min(trials, start + kBlock);
    for (long long trial = start; trial < end; ++trial) {
      int diff = 0;
      for (int i = 0; i < m; ++i) diff += rng.bernoulli(q);
      for (int i = 0; i < m; ++i) diff -= rng.bernoulli(p);
      if (diff >= delta) ++hits;
    }
  }
  MonteCarloEstimate result;
  result.trials = trials;
  result.estimate = static_cast<double>(hits) / trials;
  result.std_error = std::sqrt(result.estimate * (1.0 - result.estimate) / trials);
  return result;
}

double g_function(double alpha, double beta, double epsilon) {
  require(alpha > 0.0 && beta > 0.0 && epsilon >= 0.0,
          "g needs alpha, beta > 0 and epsilon >= 0");
  const double half = epsilon / 2.0;
  const double s = std::sqrt(half * half + alpha * beta);
  return (alpha + beta) - epsilon * std::log(alpha) - 2.0 * s +
         half * std::log(alpha * beta * (s + half) / (s - half));
}

double threshold_beta(double alpha) {
  require(alpha >= 1.0, "threshold_beta needs alpha >= 1");
  const double root = std::sqrt(alpha) - 1.0;
  return root * root;
}

double threshold_gamma(double alpha, double beta, double gamma, double c) {
  require(alpha > 0.0 && beta >= 0.0 && gamma >= 0.0,
          "threshold_gamma needs alpha > 0 and beta, gamma >= 0");
  const double bg = beta * gamma;
  const double correction =
      bg > 0.0 ? c * std::sqrt(bg) * (1.0 + std::log(std::sqrt(alpha / beta))) : 0.0;
  require(1.0 + correction >= 0.0, "threshold_gamma radicand is negative");
  return (std::sqrt(alpha) - std::sqrt(beta)) - std::sqrt(1.0 + correction);
}

LambdaMaxReport lambda_max_check(const Graph& graph, const Partition& partition,
                                 const SbmParams& params, double c) {
  const EdgeProbabilities probs = derive_pq(params);
  const double n = graph.num_vertices();
  const double nk = n / partition.num_clusters();
  const Eigen::MatrixXd q = subspace_basis(partition);
  LambdaMaxReport report;
  const Eigen::MatrixXd compressed = q.transpose() * graph.adjacency() * q;
  report.empirical = max_eigenvalue(0.5 * (compressed + compressed.transpose()));
  report.bound =
      3.0 * std::sqrt(probs.p * nk + probs.q * n) + c * std::sqrt(std::log(n));
  report.holds = report.empirical <= report.bound;
  return report;
}

double DegreeDeviationReport::out_sum_slack() const {
  return out_sum_bound -
         *std::max_element(cluster_out_sums.begin(), cluster_out_sums.end());
}

DegreeDeviationReport degree_deviation_check(const Graph& graph,
                                             const Partition& partition,
                                             const SbmParams& params) {
  const DegreeProfile profile = compute_profile(graph, partition);
  const double q = derive_pq(params).q;
  const double n = graph.num_vertices();
  const double k = partition.num_clusters();
  const double nk = n / k;
  const double log_n = std::log(n);
  const double log_k = std::log(k);

  DegreeDeviationReport report;
  for (int t = 0; t < partition.num_clusters(); ++t) {
    double sum = 0.0;
    for (int j : partition.members(t)) sum += profile.delta_out_max[j];
    report.cluster_out_sums.push_back(sum / nk);
  }
  const double spread =
      std::max({q, std::sqrt(q * log_n / nk), log_n / nk});
  report.out_sum_bound =
      q * nk + 30.0 * (std::sqrt(n * log_k / k * q) + log_k +
                       std::sqrt(nk * log_n) * spread);
  report.out_sum_holds = report.out_sum_slack() >= 0.0;

  report.min_pair_scaled = profile.min_cross_pair_degree() / nk;
  report.pair_bound = q * nk - 2.0 * std::sqrt(q * log_n);
  report.pair_holds = report.pair_slack() >= 0.0;
  return report;
}

int EdeltaReport::trials_within_bound() const {
  return static_cast<int>(std::count_if(trial_means.begin(), trial_means.end(),
                                        [&](double v) { return v <= bound; }));
}

EdeltaReport edelta_expectation_check(const SbmParams& params, int trials,
                                      std::uint64_t seed) {
  require(trials >= 1, "edelta_expectation_check needs trials >= 1");
  EdeltaReport report;
  for (int trial = 0; trial < trials; ++trial) {
    SbmParams trial_params = params;
    trial_params.seed = mix_seed(seed, static_cast<std::uint64_t>(trial));
    const SbmInstance instance = sample_graph(trial_params);
    const DegreeProfile profile = compute_profile(instance.graph, instance.partition);
    const double mean =
        std::accumulate(profile.delta_out_max.begin(), profile.delta_out_max.end(), 0.0) /
        profile.delta_out_max.size();
    report.trial_means.push_back(mean);
  }
  report.empirical_mean =
      std::accumulate(report.trial_means.begin(), report.trial_means.end(), 0.0) /
      trials;
  const double q = derive_pq(params).q;
  const double n = params.n();
  const double k = params.k;
  report.bound = q * n / k + 28.0 * (std::sqrt(n * std::log(k) / k * q) + std::log(k));
  report.holds = report.empirical_mean <= report.bound;
  return report;
}

OptimalityGapReport optimality_gap_check(const Graph& graph,
                                         const Partition& partition,
                                         const SbmParams& params, double c2) {
  const DegreeProfile profile = compute_profile(graph, partition);
  OptimalityGapReport report;
  report.min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < graph.num_vertices(); ++i) {
    for (int t = 0; t < partition.num_clusters(); ++t) {
      if (t == partition.cluster_of(i)) continue;
      report.min_gap = std::min<double>(
          report.min_gap, profile.delta_in[i] - profile.delta_to_cluster(i, t));
    }
  }
  const double log_n = std::log(static_cast<double>(params.n()));
  const double gamma = params.k / std::log(static_cast<double>(params.m));
  report.bound = c2 * (std::sqrt(params.beta * gamma) * log_n +
                       std::sqrt(params.alpha * log_n));
  report.holds = report.min_gap > report.bound;
  return report;
}

}  // namespace sbmsdp
