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

// First-order solver for the SDP template
//
//   maximize    C . Y
//   subject to  Y_ii = diag_value
//               Y 1 = row_sum 1                  (optional)
//               elem_lower <= Y_ij <= elem_upper (i != j, upper optional)
//               Y PSD
//
// using consensus ADMM over the PSD cone, the row-sum affine set and the box.

#ifndef SBMSDP_SDP_ENGINE_H_
#define SBMSDP_SDP_ENGINE_H_

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace sbmsdp {

struct SdpProblem {
  Eigen::MatrixXd objective;
  double diag_value = 1.0;
  std::optional<double> row_sum;
  double elem_lower = 0.0;
  std::optional<double> elem_upper;

  int size() const { return static_cast<int>(objective.rows()); }

  // Throws BadDimensions if C is empty, non-square or asymmetric, or the
  // bounds are inconsistent.
  void validate() const;
};

struct SolveSettings {
  double rho = 1.0;
  double tol_primal = 1e-6;
  double tol_dual = 1e-6;
  int max_iter = 20000;
  double over_relaxation = 1.6;
  // Doubles/halves rho every 50 iterations when one residual exceeds the
  // other by more than 10x.
  bool adaptive_rho = true;

  void validate() const;
};

enum class SolveStatus { kConverged, kMaxIterReached };

struct SolveResult {
  Eigen::MatrixXd y;
  double objective_value = 0.0;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  SolveStatus status = SolveStatus::kMaxIterReached;
  // max(primal, dual) after every iteration.
  std::vector<double> residual_history;
};

SolveResult solve(const SdpProblem& problem, const SolveSettings& settings = {});

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns
};

// Throws NumericalBreakdown if the decomposition fails.
SymmetricEigen eig_symmetric(const Eigen::MatrixXd& m);

double min_eigenvalue(const Eigen::MatrixXd& m);
double max_eigenvalue(const Eigen::MatrixXd& m);

// Frobenius projection onto the PSD cone.
Eigen::MatrixXd psd_project(const Eigen::MatrixXd& m);

// Frobenius projection of a symmetric matrix onto {Y symmetric : Y 1 = s 1}:
//   r = s 1 - X 1,  sbar = 1'r / (2n),  u = (r - sbar 1) / n,
//   Y = X + u 1' + 1 u'.
// Identity when row_sum is empty. The diagonal is pinned by the box block.
Eigen::MatrixXd affine_project(const Eigen::MatrixXd& x,
                               std::optional<double> row_sum);

// Clamps off-diagonal entries to [lower, upper] and sets the diagonal.
Eigen::MatrixXd box_project(const Eigen::MatrixXd& x, double diag_value,
                            double lower, std::optional<double> upper);

// Largest violation over all constraints of the template, including
// -lambda_min(Y).
double max_constraint_violation(const SdpProblem& problem,
                                const Eigen::MatrixXd& y);

}  // namespace sbmsdp

#endif  // SBMSDP_SDP_ENGINE_H_
