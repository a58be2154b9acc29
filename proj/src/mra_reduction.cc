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

#include "sbmsdp/mra_reduction.h"

#include <cmath>

#include "sbmsdp/errors.h"
#include "sbmsdp/sdp_engine.h"

namespace sbmsdp {

namespace {

void check_square(const Eigen::MatrixXd& z, int k) {
  if (z.rows() != z.cols() || z.rows() == 0) {
    throw BadDimensions("Z must be a non-empty square matrix");
  }
  if (k < 2) throw BadDimensions("k must be at least 2");
}

}  // namespace

LiftedMatrix build_lifted(const Eigen::MatrixXd& z, int k) {
  check_square(z, k);
  const Eigen::Index n = z.rows();
  const Eigen::MatrixXd off =
      (Eigen::MatrixXd::Ones(n, n) - z) / static_cast<double>(k - 1);
  LiftedMatrix result{z, k, Eigen::MatrixXd(n * k, n * k)};
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      result.lifted.block(a * n, b * n, n, n) = a == b ? z : off;
    }
  }
  return result;
}

PsdEquivalence psd_equivalence_check(const Eigen::MatrixXd& z, int k, double tol) {
  check_square(z, k);
  const Eigen::Index n = z.rows();
  PsdEquivalence result;
  result.lhs_min_eig = min_eigenvalue(build_lifted(z, k).lifted);
  result.rhs_min_eig =
      min_eigenvalue(z - Eigen::MatrixXd::Constant(n, n, 1.0 / k));
  if (!std::isfinite(result.lhs_min_eig) || !std::isfinite(result.rhs_min_eig)) {
    throw NumericalBreakdown("non-finite eigenvalue in PSD equivalence check");
  }
  result.agree = (result.lhs_min_eig >= -tol) == (result.rhs_min_eig >= -tol);
  result.indeterminate = std::abs(result.rhs_min_eig) < tol;
  return result;
}

Eigen::MatrixXd change_of_variables(const Eigen::MatrixXd& z, int k) {
  check_square(z, k);
  const double scale = static_cast<double>(k) / (k - 1);
  return scale * z -
         Eigen::MatrixXd::Constant(z.rows(), z.cols(), 1.0 / (k - 1));
}

Eigen::MatrixXd inverse_change_of_variables(const Eigen::MatrixXd& y, int k) {
  check_square(y, k);
  const double scale = static_cast<double>(k - 1) / k;
  return scale * y + Eigen::MatrixXd::Constant(y.rows(), y.cols(), 1.0 / k);
}

}  // namespace sbmsdp
