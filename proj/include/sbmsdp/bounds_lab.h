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

// Evaluable forms of the concentration inequalities, rate functions and
// high-probability degree/spectral bounds used in the recovery analysis,
// plus Monte-Carlo estimators to check them against.
//
// Constants that theory leaves unspecified (c, c_2, ...) are caller
// parameters; any defaults are illustrative only.

#ifndef SBMSDP_BOUNDS_LAB_H_
#define SBMSDP_BOUNDS_LAB_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sbmsdp/sbm_model.h"

namespace sbmsdp {

// P(X > (1 + delta) mu) < (e^delta / (1 + delta)^(1 + delta))^mu, delta >= 0.
double chernoff_upper(double mu, double delta);
// P(X < (1 - delta) mu) < (e^-delta / (1 - delta)^(1 - delta))^mu,
// 0 <= delta <= 1.
double chernoff_lower(double mu, double delta);
// exp(-delta^2 mu / 3), 0 <= delta <= 1.
double chernoff_simplified_upper(double mu, double delta);
// exp(-delta^2 mu / 2), 0 <= delta <= 1.
double chernoff_simplified_lower(double mu, double delta);

// P(|X - mu| >= t) <= exp(-(1/2) t^2 / (sigma_sq_sum + M t / 3)) for
// independent summands in [-M, M].
double bernstein_tail(double t, double sigma_sq_sum, double range);

// P(|mean - E mean| >= t) <= 2 exp(-2 n^2 t^2 / sum (b_i - a_i)^2) with one
// interval per summand.
double hoeffding_tail(double t, std::span<const std::pair<double, double>> ranges);

struct CorollaryBound {
  double threshold = 0.0;  // mu + a sigma sqrt(n ln r) + a ln r
  double bound = 0.0;      // exp(-a ln r / 4)
};

// Tail of a Binomial(n, p) sum above its mean, with sigma = sqrt(p (1 - p))
// the per-summand standard deviation. Requires r >= 1.
CorollaryBound corollary_bound(int n, double p, double alpha_c, double r);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long long trials = 0;
};

// T(m, p, q, delta) = P(sum_i (Z_i - W_i) >= delta) with W_i ~ Bernoulli(p),
// Z_i ~ Bernoulli(q), all independent.
double t_statistic_exact(int m, double p, double q, double delta);

// Monte-Carlo estimate of T. Trials are split into fixed blocks, each with a
// seed derived from (seed, block index), so the result does not depend on
// scheduling.
MonteCarloEstimate t_statistic_mc(int m, double p, double q, double delta,
                                  long long trials, std::uint64_t seed);

// g(a, b, e) = (a + b) - e ln a - 2 s + (e/2) ln(a b (s + e/2) / (s - e/2)),
// s = sqrt((e/2)^2 + a b). g(a, b, 0) = (sqrt a - sqrt b)^2.
double g_function(double alpha, double beta, double epsilon);

// Exact-recovery threshold beta = (sqrt(alpha) - 1)^2. Requires alpha >= 1.
double threshold_beta(double alpha);

// (sqrt a - sqrt b) - sqrt(1 + c sqrt(b g) (1 + ln sqrt(a / b))); positive
// means the growing-k recovery condition holds. The sqrt(b g) log term is
// taken as 0 when b g = 0.
double threshold_gamma(double alpha, double beta, double gamma, double c);

struct LambdaMaxReport {
  double empirical = 0.0;  // largest eigenvalue of A on R_{n|k}
  double bound = 0.0;      // 3 sqrt(pn/k + qn) + c sqrt(ln n)
  bool holds = false;
};

LambdaMaxReport lambda_max_check(const Graph& graph, const Partition& partition,
                                 const SbmParams& params, double c);

struct DegreeDeviationReport {
  // sum_{j in P_t} delta_out_max(j) / (n/k), one per cluster.
  std::vector<double> cluster_out_sums;
  double out_sum_bound = 0.0;
  // min_{t1 != t2} pair_degree / (n/k).
  double min_pair_scaled = 0.0;
  double pair_bound = 0.0;
  bool out_sum_holds = false;
  bool pair_holds = false;

  bool holds() const { return out_sum_holds && pair_holds; }
  double out_sum_slack() const;
  double pair_slack() const { return min_pair_scaled - pair_bound; }
};

// Evaluates both degree-sum deviation inequalities with the explicit
// constants 30 and 2.
DegreeDeviationReport degree_deviation_check(const Graph& graph,
                                             const Partition& partition,
                                             const SbmParams& params);

struct EdeltaReport {
  // Mean of delta_out_max over vertices, one entry per sampled graph.
  std::vector<double> trial_means;
  double empirical_mean = 0.0;
  // qn/k + 28 (sqrt((n ln k / k) q) + ln k)
  double bound = 0.0;
  bool holds = false;

  int trials_within_bound() const;
};

// Samples `trials` graphs with seeds mix_seed(seed, trial).
EdeltaReport edelta_expectation_check(const SbmParams& params, int trials,
                                      std::uint64_t seed);

struct OptimalityGapReport {
  // min over i and t != P(i) of delta_in(i) - delta_{i -> P_t}
  double min_gap = 0.0;
  // c2 (sqrt(beta gamma) ln n + sqrt(alpha ln n)), gamma = k / ln m
  double bound = 0.0;
  bool holds = false;
};

OptimalityGapReport optimality_gap_check(const Graph& graph,
                                         const Partition& partition,
                                         const SbmParams& params, double c2);

}  // namespace sbmsdp

#endif  // SBMSDP_BOUNDS_LAB_H_
