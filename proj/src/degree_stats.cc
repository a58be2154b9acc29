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

#include "sbmsdp/degree_stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sbmsdp/errors.h"

namespace sbmsdp {

int DegreeProfile::min_big_delta() const {
  return *std::min_element(big_delta.begin(), big_delta.end());
}

double DegreeProfile::min_nu() const {
  return *std::min_element(nu.begin(), nu.end());
}

long long DegreeProfile::sum_delta_in() const {
  return std::accumulate(delta_in.begin(), delta_in.end(), 0LL);
}

int DegreeProfile::min_cross_pair_degree() const {
  const int k = static_cast<int>(pair_degree.rows());
  int best = std::numeric_limits<int>::max();
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b) best = std::min(best, pair_degree(a, b));
    }
  }
  return k > 1 ? best : 0;
}

DegreeProfile compute_profile(const Graph& graph, const Partition& partition) {
  const int n = graph.num_vertices();
  if (partition.num_vertices() != n) {
    throw MismatchedPartition("partition covers " +
                              std::to_string(partition.num_vertices()) +
                              " vertices, graph has " + std::to_string(n));
  }
  const int k = partition.num_clusters();
  const double m = partition.cluster_size();

  DegreeProfile profile;
  profile.delta_to_cluster = Eigen::MatrixXi::Zero(n, k);
  for (const auto& [i, j] : graph.edges()) {
    ++profile.delta_to_cluster(i, partition.cluster_of(j));
    ++profile.delta_to_cluster(j, partition.cluster_of(i));
  }

  profile.pair_degree = Eigen::MatrixXi::Zero(k, k);
  profile.delta_in.resize(n);
  profile.delta_out_max.resize(n);
  profile.big_delta.resize(n);
  for (int i = 0; i < n; ++i) {
    const int own = partition.cluster_of(i);
    int out_max = 0;
    for (int t = 0; t < k; ++t) {
      profile.pair_degree(own, t) += profile.delta_to_cluster(i, t);
      if (t != own) out_max = std::max(out_max, profile.delta_to_cluster(i, t));
    }
    profile.delta_in[i] = profile.delta_to_cluster(i, own);
    profile.delta_out_max[i] = out_max;
    profile.big_delta[i] = profile.delta_in[i] - out_max;
  }

  // For a fixed cluster pair (s, t) the objective separates into a term in a
  // and a term in b, so the vertex-pair maximum is a per-cluster maximum.
  double pair_max = k > 1 ? -std::numeric_limits<double>::infinity() : 0.0;
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) {
      if (s == t) continue;
      int best_a = std::numeric_limits<int>::min();
      for (int a : partition.members(s)) {
        best_a = std::max(best_a, profile.delta_to_cluster(a, t));
      }
      int best_b = std::numeric_limits<int>::min();
      for (int b : partition.members(t)) {
        best_b = std::max(best_b, profile.delta_to_cluster(b, s));
      }
      pair_max = std::max(pair_max, best_a + best_b - profile.pair_degree(t, s) / m);
    }
  }
  profile.nu.resize(n);
  for (int i = 0; i < n; ++i) profile.nu[i] = profile.delta_in[i] - pair_max;
  return profile;
}

namespace {

struct Scales {
  double p, q, n, k, nk;
};

Scales scales(const SbmParams& params) {
  const EdgeProbabilities probs = derive_pq(params);
  const double n = params.n();
  return {probs.p, probs.q, n, static_cast<double>(params.k), n / params.k};
}

}  // namespace

ConditionReport check_condition_main(const DegreeProfile& profile,
                                     const SbmParams& params, double c_hat) {
  const Scales s = scales(params);
  const double rhs =
      c_hat * (std::sqrt(s.p * s.nk + s.q * s.n) +
               s.q * std::sqrt(s.nk * std::log(s.n)) + std::sqrt(std::log(s.n)) +
               std::log(s.k));
  const double lhs = profile.min_big_delta();
  return {lhs, rhs, c_hat, lhs >= rhs};
}

ConditionReport check_condition_sdp2(const DegreeProfile& profile,
                                     const SbmParams& params, double c_hat) {
  const Scales s = scales(params);
  const double rhs =
      c_hat * (std::sqrt(s.p * s.nk + s.q * s.n) + std::sqrt(std::log(s.n)));
  const double lhs = profile.min_nu();
  return {lhs, rhs, c_hat, lhs >= rhs};
}

}  // namespace sbmsdp
