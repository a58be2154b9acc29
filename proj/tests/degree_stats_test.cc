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

#include <gtest/gtest.h>

#include "sbmsdp/errors.h"

namespace sbmsdp {
namespace {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

TEST(ComputeProfile, DisjointTriangles) {
  const DegreeProfile prof = compute_profile(disjoint_cliques(2, 3), Partition::contiguous(2, 3));
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(prof.delta_in[i], 2);
    EXPECT_EQ(prof.delta_out_max[i], 0);
    EXPECT_EQ(prof.big_delta[i], 2);
  }
  EXPECT_EQ(prof.pair_degree(0, 0), 6);
  EXPECT_EQ(prof.pair_degree(0, 1), 0);
}

TEST(ComputeProfile, CompleteGraph) {
  const DegreeProfile prof = compute_profile(complete_graph(6), Partition::contiguous(2, 3));
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(prof.delta_in[i], 2);
    EXPECT_EQ(prof.delta_out_max[i], 3);
    EXPECT_EQ(prof.big_delta[i], -1);
    EXPECT_LE(prof.nu[i], 0.0);
  }
}

TEST(ComputeProfile, MismatchedPartitionThrows) {
  EXPECT_THROW(compute_profile(disjoint_cliques(2, 3), Partition::contiguous(2, 4)),
               MismatchedPartition);
}

// Double loops straight from the definitions.
TEST(ComputeProfile, MatchesBruteForce) {
  for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
    const SbmInstance inst = sample_graph({2.5, 1.5, 3, 5, seed});
    const SbmInstance shuffled = shuffle_vertices(inst, seed + 100);
    const Graph& g = shuffled.graph;
    const Partition& p = shuffled.partition;
    const int n = 15, k = 3;
    const DegreeProfile prof = compute_profile(g, p);

    auto to_cluster = [&](int i, int t) {
      int count = 0;
      for (int j = 0; j < n; ++j) count += g.has_edge(i, j) && p.cluster_of(j) == t;
      return count;
    };
    auto pair = [&](int s, int t) {
      int count = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          count += p.cluster_of(i) == s && p.cluster_of(j) == t && g.has_edge(i, j);
      return count;
    };
    double pair_max = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (p.cluster_of(a) == p.cluster_of(b)) continue;
        pair_max = std::max(pair_max, to_cluster(a, p.cluster_of(b)) +
                                          to_cluster(b, p.cluster_of(a)) -
                                          pair(p.cluster_of(b), p.cluster_of(a)) / 5.0);
      }
    }
    for (int i = 0; i < n; ++i) {
      int out_max = 0;
      for (int t = 0; t < k; ++t) {
        EXPECT_EQ(prof.delta_to_cluster(i, t), to_cluster(i, t));
        if (t != p.cluster_of(i)) out_max = std::max(out_max, to_cluster(i, t));
      }
      EXPECT_EQ(prof.delta_in[i], to_cluster(i, p.cluster_of(i)));
      EXPECT_EQ(prof.delta_out_max[i], out_max);
      EXPECT_EQ(prof.big_delta[i], prof.delta_in[i] - out_max);
      EXPECT_NEAR(prof.nu[i], prof.delta_in[i] - pair_max, 1e-12);
      EXPECT_EQ(prof.delta_to_cluster.row(i).sum(), g.degree(i));
    }
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t) EXPECT_EQ(prof.pair_degree(s, t), pair(s, t));
  }
}

TEST(ComputeProfile, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SbmInstance inst = sample_graph({3.0, 1.0, 4, 8, seed});
    const DegreeProfile prof = compute_profile(inst.graph, inst.partition);
    EXPECT_EQ(prof.pair_degree, prof.pair_degree.transpose());
    // Diagonal of pair_degree counts within-cluster edges twice.
    long long within = 0;
    for (int t = 0; t < 4; ++t) within += prof.pair_degree(t, t);
    EXPECT_EQ(within, 2 * static_cast<long long>(within_edge_count(inst.graph, inst.partition)));
    long long sum_delta = 0;
    bool all_out_zero = true;
    for (int i = 0; i < 32; ++i) {
      sum_delta += prof.big_delta[i];
      all_out_zero &= prof.delta_out_max[i] == 0;
    }
    EXPECT_LE(sum_delta, prof.sum_delta_in());
    EXPECT_EQ(sum_delta == prof.sum_delta_in(), all_out_zero);
  }
}

TEST(Conditions, ZeroConstantOnCliques) {
  const Graph g = disjoint_cliques(2, 3);
  const DegreeProfile prof = compute_profile(g, Partition::contiguous(2, 3));
  const SbmParams params{3.0 / std::log(3.0), 0.0, 2, 3, 0};
  const ConditionReport main = check_condition_main(prof, params, 0.0);
  EXPECT_EQ(main.rhs, 0.0);
  EXPECT_EQ(main.lhs, 2.0);
  EXPECT_TRUE(main.satisfied);
  const ConditionReport sdp2 = check_condition_sdp2(prof, params, 0.0);
  EXPECT_EQ(sdp2.lhs, 2.0);  // m - 1
  EXPECT_TRUE(sdp2.satisfied);
}

TEST(Conditions, HandEvaluatedRightHandSides) {
  const SbmParams params{6.0, 1.0, 3, 20, 1};
  const SbmInstance inst = sample_graph(params);
  const DegreeProfile prof = compute_profile(inst.graph, inst.partition);
  const double n = 60, k = 3, c = 0.5;
  const double p = 6.0 * std::log(20.0) / 20.0, q = std::log(20.0) / 20.0;
  const double base = std::sqrt(p * n / k + q * n);
  const double main_rhs = c * (base + q * std::sqrt(n / k * std::log(n)) +
                               std::sqrt(std::log(n)) + std::log(k));
  const double sdp2_rhs = c * (base + std::sqrt(std::log(n)));

  const ConditionReport main = check_condition_main(prof, params, c);
  EXPECT_NEAR(main.rhs, main_rhs, 1e-12);
  EXPECT_EQ(main.lhs, *std::min_element(prof.big_delta.begin(), prof.big_delta.end()));
  EXPECT_EQ(main.satisfied, main.lhs >= main_rhs);
  EXPECT_EQ(main.c_hat, c);

  const ConditionReport sdp2 = check_condition_sdp2(prof, params, c);
  EXPECT_NEAR(sdp2.rhs, sdp2_rhs, 1e-12);
  EXPECT_EQ(sdp2.lhs, *std::min_element(prof.nu.begin(), prof.nu.end()));
}

TEST(Conditions, NegativeDeltaNeverSatisfied) {
  const DegreeProfile prof = compute_profile(complete_graph(6), Partition::contiguous(2, 3));
  const SbmParams params{1.0, 0.5, 2, 3, 0};
  EXPECT_FALSE(check_condition_main(prof, params, 0.0).satisfied);
  EXPECT_FALSE(check_condition_sdp2(prof, params, 0.0).satisfied);
  EXPECT_FALSE(check_condition_main(prof, params, 1.0).satisfied);
}

}  // namespace
}  // namespace sbmsdp
