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

#include "sbmsdp/relaxations.h"

#include <cmath>

#include <gtest/gtest.h>

#include "sbmsdp/degree_stats.h"
#include "sbmsdp/errors.h"
#include "sbmsdp/mra_reduction.h"

namespace sbmsdp {
namespace {

Eigen::MatrixXd uniform_point(int n, int k) {
  return Eigen::MatrixXd::Constant(n, n, 1.0 / k) +
         (1.0 - 1.0 / k) * Eigen::MatrixXd::Identity(n, n);
}

TEST(Build, BalancedLayout) {
  const Graph g = disjoint_cliques(2, 3);
  const SdpProblem p = build(RelaxationKind::kBalancedRowSum, g, 2);
  EXPECT_EQ(p.objective, g.adjacency());
  EXPECT_EQ(p.diag_value, 1.0);
  EXPECT_EQ(p.row_sum, 3.0);
  EXPECT_EQ(p.elem_lower, 0.0);
  EXPECT_EQ(p.elem_upper, 1.0);
  const Eigen::MatrixXd planted = planted_matrix(Partition::contiguous(2, 3));
  EXPECT_EQ(p.objective.cwiseProduct(planted).sum(), 12.0);
}

TEST(Build, MaxKCutLayout) {
  const Graph g = disjoint_cliques(3, 2);
  const SdpProblem p = build(RelaxationKind::kMaxKCut, g, 3);
  EXPECT_EQ(p.objective, 2.0 * g.adjacency() - Eigen::MatrixXd::Ones(6, 6));
  EXPECT_FALSE(p.row_sum.has_value());
  EXPECT_DOUBLE_EQ(p.elem_lower, -0.5);
  EXPECT_EQ(p.elem_upper, 1.0);
}

TEST(Build, KMustDivideN) {
  EXPECT_THROW(build(RelaxationKind::kBalancedRowSum, disjoint_cliques(2, 3), 4),
               BadDimensions);
}

TEST(Build, PlantedMatrixIsFeasibleForBoth) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SbmInstance inst = shuffle_vertices(sample_graph({3.0, 1.0, 3, 6, seed}), seed);
    const Eigen::MatrixXd planted = planted_matrix(inst.partition);
    EXPECT_LE(max_constraint_violation(
                  build(RelaxationKind::kBalancedRowSum, inst.graph, 3), planted),
              1e-12);
    EXPECT_LE(max_constraint_violation(build(RelaxationKind::kMaxKCut, inst.graph, 3),
                                       change_of_variables(planted, 3)),
              1e-12);
  }
}

// (2A - J) . Y_P, once as a matrix inner product and once from edge counts.
// Y_P has 1 on same-cluster pairs and -1/(k-1) across.
TEST(Build, MaxKCutObjectiveTwoWays) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int k = 3, m = 7, n = k * m;
    const SbmInstance inst = sample_graph({3.0, 1.5, k, m, seed});
    const Eigen::MatrixXd y = change_of_variables(planted_matrix(inst.partition), k);
    const double direct =
        build(RelaxationKind::kMaxKCut, inst.graph, k).objective.cwiseProduct(y).sum();
    const double within = within_edge_count(inst.graph, inst.partition);
    const double cross = cross_edge_count(inst.graph, inst.partition);
    const double same_pairs = n * m;          // ordered, diagonal included
    const double cross_pairs = n * (n - m);   // ordered
    const double counted = (4 * within - same_pairs) +
                           (-1.0 / (k - 1)) * (4 * cross - cross_pairs);
    EXPECT_NEAR(direct, counted, 1e-9);
    // Same-cluster part equals 2 sum delta_in - n m.
    const double in_sum = compute_profile(inst.graph, inst.partition).sum_delta_in();
    EXPECT_EQ(4 * within - same_pairs, 2 * in_sum - n * m);
  }
}

TEST(DetectIntegrality, PlantedMatrix) {
  const Partition p({1, 0, 2, 0, 1, 2});
  const IntegralityVerdict v =
      detect_integrality(planted_matrix(p), RelaxationKind::kBalancedRowSum, 3);
  EXPECT_TRUE(v.is_integral);
  ASSERT_TRUE(v.recovered.has_value());
  EXPECT_TRUE(v.recovered->same_clustering(p));
  EXPECT_EQ(v.max_entry_deviation, 0.0);

  const IntegralityVerdict w = detect_integrality(
      change_of_variables(planted_matrix(p), 3), RelaxationKind::kMaxKCut, 3);
  EXPECT_TRUE(w.is_integral);
  EXPECT_TRUE(w.recovered->same_clustering(p));
  EXPECT_LE(w.max_entry_deviation, 1e-15);
}

TEST(DetectIntegrality, UniformPointIsNotIntegral) {
  const Eigen::MatrixXd y = uniform_point(9, 3);
  EXPECT_FALSE(detect_integrality(y, RelaxationKind::kBalancedRowSum, 3).is_integral);
  EXPECT_FALSE(detect_integrality(y, RelaxationKind::kMaxKCut, 3).is_integral);
}

TEST(DetectIntegrality, ThresholdsAreMidpoints) {
  EXPECT_EQ(integral_threshold(RelaxationKind::kBalancedRowSum, 3), 0.5);
  EXPECT_DOUBLE_EQ(integral_threshold(RelaxationKind::kMaxKCut, 3), 0.25);
  EXPECT_DOUBLE_EQ(integral_threshold(RelaxationKind::kMaxKCut, 2), 0.0);
}

TEST(DetectIntegrality, SolverOutputInRecoveryRegime) {
  const SbmInstance inst = sample_graph({6.5, 0.5, 3, 20, 3});
  const RelaxationRun run = run_relaxation(RelaxationKind::kBalancedRowSum, inst.graph, 3);
  EXPECT_TRUE(run.verdict.is_integral);
  ASSERT_TRUE(run.verdict.recovered.has_value());
  EXPECT_TRUE(run.verdict.recovered->same_clustering(inst.partition));
  EXPECT_EQ(run.verdict.certificate_confirmed, true);
  EXPECT_TRUE(run.counts_as_integral(RelaxationKind::kBalancedRowSum));
}

TEST(RoundSolution, IntegralMatrixRoundsToPlanted) {
  const Partition p = Partition::contiguous(3, 4);
  const RoundingResult r = round_solution(planted_matrix(p), RelaxationKind::kBalancedRowSum, 3);
  ASSERT_TRUE(r.partition.has_value());
  EXPECT_TRUE(r.partition->same_clustering(p));
  EXPECT_EQ(r.component_sizes, (std::vector<int>{4, 4, 4}));
}

TEST(RoundSolution, OneFlippedEntryStillRounds) {
  const Partition p = Partition::contiguous(3, 4);
  Eigen::MatrixXd y = planted_matrix(p);
  y(0, 1) = y(1, 0) = 0.2;
  const RoundingResult r = round_solution(y, RelaxationKind::kBalancedRowSum, 3);
  ASSERT_TRUE(r.partition.has_value());
  EXPECT_TRUE(r.partition->same_clustering(p));
}

TEST(RoundSolution, UniformPointFails) {
  // Balanced threshold 1/2 exceeds the 1/3 off-diagonal: n singletons.
  const RoundingResult a = round_solution(uniform_point(9, 3), RelaxationKind::kBalancedRowSum, 3);
  EXPECT_FALSE(a.partition.has_value());
  EXPECT_EQ(a.component_sizes, std::vector<int>(9, 1));
  // Max-k-Cut threshold 1/4 is below 1/3: one giant component.
  const RoundingResult b = round_solution(uniform_point(9, 3), RelaxationKind::kMaxKCut, 3);
  EXPECT_FALSE(b.partition.has_value());
  EXPECT_EQ(b.component_sizes, std::vector<int>{9});
}

TEST(RelaxationKind, NamesRoundTrip) {
  for (RelaxationKind kind : {RelaxationKind::kBalancedRowSum, RelaxationKind::kMaxKCut}) {
    EXPECT_EQ(parse_relaxation_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_relaxation_kind("sdp9"), DomainError);
}

// The upper bound Y_ij <= 1 is implied by PSD and unit diagonal.
TEST(Build, UpperBoundDoesNotChangeOptimum) {
  // One instance has a slow sublinear ADMM tail (~32k iterations).
  SolveSettings settings;
  settings.max_iter = 50000;
  int compared = 0;
  for (std::uint64_t seed = 0; compared < 20; ++seed) {
    const SbmInstance inst = sample_graph({3.0, 1.5, 3, 6, seed});
    for (RelaxationKind kind : {RelaxationKind::kMaxKCut, RelaxationKind::kBalancedRowSum}) {
      SdpProblem with = build(kind, inst.graph, 3);
      SdpProblem without = with;
      without.elem_upper.reset();
      const SolveResult a = solve(with, settings);
      const SolveResult b = solve(without, settings);
      ASSERT_EQ(a.status, SolveStatus::kConverged);
      ASSERT_EQ(b.status, SolveStatus::kConverged);
      EXPECT_NEAR(a.objective_value, b.objective_value,
                  1e-4 * std::max(1.0, std::abs(a.objective_value)));
    }
    ++compared;
  }
}

}  // namespace
}  // namespace sbmsdp
