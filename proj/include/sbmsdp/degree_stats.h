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

// Degree statistics of a graph relative to a planted partition, and the
// sufficient recovery conditions built from them.

#ifndef SBMSDP_DEGREE_STATS_H_
#define SBMSDP_DEGREE_STATS_H_

#include <vector>

#include <Eigen/Dense>

#include "sbmsdp/sbm_model.h"

namespace sbmsdp {

struct DegreeProfile {
  // delta_to_cluster(i, t): number of neighbours of i inside cluster t.
  Eigen::MatrixXi delta_to_cluster;
  std::vector<int> delta_in;
  // Largest delta_to_cluster(i, t) over t != P(i); 0 when k = 1.
  std::vector<int> delta_out_max;
  // delta_in - delta_out_max.
  std::vector<int> big_delta;
  // delta_in(i) minus the global pair maximum; see compute_profile.
  std::vector<double> nu;
  // pair_degree(t1, t2) = sum_{i in t1, j in t2} A[i][j]. The diagonal counts
  // every within-cluster edge twice.
  Eigen::MatrixXi pair_degree;

  int min_big_delta() const;
  double min_nu() const;
  long long sum_delta_in() const;
  // Smallest pair_degree over distinct clusters (0 when k = 1).
  int min_cross_pair_degree() const;
};

// nu(i) = delta_in(i) - max over ordered pairs (a, b) with P(a) != P(b) of
//   delta_{a -> P(b)} + delta_{b -> P(a)} - pair_degree(P(b), P(a)) / m.
// The maximum is global (it does not depend on i).
// Throws MismatchedPartition if the vertex counts differ.
DegreeProfile compute_profile(const Graph& graph, const Partition& partition);

struct ConditionReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double c_hat = 0.0;
  bool satisfied = false;
};

inline constexpr double kDefaultCHat = 0.5;

// min_i Delta(i) >= c_hat * (sqrt(pn/k + qn) + q sqrt((n/k) ln n)
//                            + sqrt(ln n) + ln k).
// Advisory only: c_hat is not pinned by theory.
ConditionReport check_condition_main(const DegreeProfile& profile,
                                     const SbmParams& params,
                                     double c_hat = kDefaultCHat);

// min_i nu(i) >= c_hat * (sqrt(pn/k + qn) + sqrt(ln n)).
ConditionReport check_condition_sdp2(const DegreeProfile& profile,
                                     const SbmParams& params,
                                     double c_hat = kDefaultCHat);

}  // namespace sbmsdp

#endif  // SBMSDP_DEGREE_STATS_H_
