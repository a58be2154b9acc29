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

#include "sbmsdp/sdp_engine.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sbmsdp/errors.h"

namespace sbmsdp {

void SdpProblem::validate() const {
  const int n = size();
  if (n < 1 || objective.cols() != n) {
    throw BadDimensions("objective must be a nonempty square matrix");
  }
  const double scale = std::max(1.0, objective.cwiseAbs().maxCoeff());
  if ((objective - objective.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw BadDimensions("objective must be symmetric");
  }
  if (elem_upper && *elem_upper < elem_lower) {
    throw BadDimensions("elem_upper is below elem_lower");
  }
  if (row_sum) {
    if (*row_sum < diag_value) throw BadDimensions("row_sum is below diag_value");
    if (elem_upper && *row_sum > n * *elem_upper) {
      throw BadDimensions("row_sum exceeds n * elem_upper");
    }
  }
}

void SolveSettings::validate() const {
  if (!(rho > 0) || !(tol_primal > 0) || !(tol_dual > 0) || max_iter < 1) {
    throw DomainError("solver settings must be positive");
  }
  if (over_relaxation < 1.0 || over_relaxation > 1.8) {
    throw DomainError("over_relaxation must lie in [1, 1.8]");
  }
}

SymmetricEigen eig_symmetric(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalBreakdown("symmetric eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalBreakdown("symmetric eigendecomposition did not converge");
  }
  return solver.eigenvalues()(0);
}

double max_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalBreakdown("symmetric eigendecomposition did not converge");
  }
  return solver.eigenvalues()(m.rows() - 1);
}

namespace {

// Projection with a reusable solver. Reconstructs from whichever side of the
// spectrum has fewer eigenpairs.
void psd_project_into(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& solver,
                      const Eigen::MatrixXd& m, Eigen::MatrixXd& out) {
  solver.compute(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalBreakdown("symmetric eigendecomposition did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const Eigen::Index n = values.size();
  Eigen::Index negative = 0;
  while (negative < n && values(negative) < 0.0) ++negative;
  const Eigen::Index positive = n - negative;
  if (positive <= negative) {
    const auto v = vectors.rightCols(positive);
    out.noalias() = v * values.tail(positive).asDiagonal() * v.transpose();
  } else {
    const auto v = vectors.leftCols(negative);
    out = m;
    out.noalias() -= v * values.head(negative).asDiagonal() * v.transpose();
  }
  out = 0.5 * (out + out.transpose()).eval();
}

}  // namespace

Eigen::MatrixXd psd_project(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.rows());
  Eigen::MatrixXd out(m.rows(), m.cols());
  psd_project_into(solver, m, out);
  return out;
}

Eigen::MatrixXd affine_project(const Eigen::MatrixXd& x,
                               std::optional<double> row_sum) {
  if (!row_sum) return x;
  const double n = static_cast<double>(x.rows());
  const Eigen::VectorXd r =
      Eigen::VectorXd::Constant(x.rows(), *row_sum) - x.rowwise().sum();
  const double sbar = r.sum() / (2.0 * n);
  const Eigen::VectorXd u = (r.array() - sbar).matrix() / n;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(x.rows());
  return x + u * ones.transpose() + ones * u.transpose();
}

Eigen::MatrixXd box_project(const Eigen::MatrixXd& x, double diag_value,
                            double lower, std::optional<double> upper) {
  const double hi = upper.value_or(std::numeric_limits<double>::infinity());
  Eigen::MatrixXd out = x.cwiseMax(lower).cwiseMin(hi);
  out.diagonal().setConstant(diag_value);
  return out;
}

double max_constraint_violation(const SdpProblem& problem,
                                const Eigen::MatrixXd& y) {
  const int n = problem.size();
  double worst = std::max(0.0, -min_eigenvalue(y));
  const double hi =
      problem.elem_upper.value_or(std::numeric_limits<double>::infinity());
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(y(i, i) - problem.diag_value));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      worst = std::max({worst, problem.elem_lower - y(i, j), y(i, j) - hi});
    }
  }
  if (problem.row_sum) {
    const Eigen::VectorXd sums = y.rowwise().sum();
    worst = std::max(worst, (sums.array() - *problem.row_sum).abs().maxCoeff());
  }
  return worst;
}

// Consensus ADMM for  min -C.Y  s.t.  Y = X_b, X_b in K_b  (b = 1..N).
// With scaled duals U_b and over-relaxation a, one iteration is
//
//   X_b   = Pi_{K_b}(Y - U_b)
//   Xh_b  = a X_b + (1 - a) Y
//   Y+    = mean_b(Xh_b + U_b) + C / (N rho)
//   U_b  += Xh_b - Y+
//
// Residuals:
//   primal = max_b ||X_b - Y+||_F                      (absolute)
//   dual   = rho sqrt(N) ||Y+ - Y||_F / max(1, ||C||_F)
//
// The primal residual is absolute so that feasibility at convergence is
// stated in the units of the constraints. Convergence additionally requires
// max_constraint_violation(Y) <= 10 tol_primal, checked with one extra
// eigendecomposition whenever both residual tests pass.
SolveResult solve(const SdpProblem& problem, const SolveSettings& settings) {
  problem.validate();
  settings.validate();
  const int n = problem.size();
  const Eigen::MatrixXd& c = problem.objective;
  const double c_norm = std::max(1.0, c.norm());
  const double a = settings.over_relaxation;

  enum Block { kPsd, kBox, kAffine };
  std::vector<Block> blocks = {kPsd, kBox};
  if (problem.row_sum) blocks.push_back(kAffine);
  const int num_blocks = static_cast<int>(blocks.size());
  const double sqrt_blocks = std::sqrt(static_cast<double>(num_blocks));

  Eigen::MatrixXd y = problem.diag_value * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd y_prev(n, n);
  std::vector<Eigen::MatrixXd> x(num_blocks, y);
  std::vector<Eigen::MatrixXd> u(num_blocks, Eigen::MatrixXd::Zero(n, n));
  Eigen::MatrixXd scratch(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen_solver(n);

  double rho = settings.rho;
  SolveResult result;
  result.residual_history.reserve(std::min(settings.max_iter, 100000));
  double best_score = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= settings.max_iter; ++iter) {
    for (int b = 0; b < num_blocks; ++b) {
      scratch = y - u[b];
      switch (blocks[b]) {
        case kPsd:
          psd_project_into(eigen_solver, scratch, x[b]);
          break;
        case kBox:
          x[b] = box_project(scratch, problem.diag_value, problem.elem_lower,
                             problem.elem_upper);
          break;
        case kAffine:
          x[b] = affine_project(scratch, problem.row_sum);
          break;
      }
    }

    y_prev = y;
    y = c / (num_blocks * rho);
    for (int b = 0; b < num_blocks; ++b) {
      x[b] = a * x[b] + (1.0 - a) * y_prev;  // relaxed copy, reused below
      y += (x[b] + u[b]) / num_blocks;
    }
    double primal = 0.0;
    for (int b = 0; b < num_blocks; ++b) {
      u[b] += x[b] - y;
      // Undo the relaxation to measure the true block residual.
      scratch = (x[b] - (1.0 - a) * y_prev) / a - y;
      primal = std::max(primal, scratch.norm());
    }
    const double dual = rho * sqrt_blocks * (y - y_prev).norm() / c_norm;
    result.residual_history.push_back(std::max(primal, dual));

    const double score =
        std::max(primal / settings.tol_primal, dual / settings.tol_dual);
    if (score < best_score) {
      best_score = score;
      result.y = y;
      result.iterations = iter;
      result.primal_residual = primal;
      result.dual_residual = dual;
    }
    if (primal <= settings.tol_primal && dual <= settings.tol_dual &&
        max_constraint_violation(problem, y) <= 10.0 * settings.tol_primal) {
      result.y = y;
      result.iterations = iter;
      result.primal_residual = primal;
      result.dual_residual = dual;
      result.status = SolveStatus::kConverged;
      break;
    }
    if (iter == settings.max_iter) result.iterations = iter;

    if (settings.adaptive_rho && iter % 50 == 0) {
      const double r = primal / settings.tol_primal;
      const double s = dual / settings.tol_dual;
      double factor = 1.0;
      if (r > 10.0 * s && rho < 1e4) factor = 2.0;
      if (s > 10.0 * r && rho > 1e-4) factor = 0.5;
      if (factor != 1.0) {
        rho *= factor;
        for (auto& ub : u) ub /= factor;
      }
    }
  }
  result.y = 0.5 * (result.y + result.y.transpose()).eval();
  result.objective_value = c.cwiseProduct(result.y).sum();
  return result;
}

}  // namespace sbmsdp
