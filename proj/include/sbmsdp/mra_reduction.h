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

// The block lift Z^(k) linking the alignment form of the Max-k-Cut program
// to the form with entrywise lower bound -1/(k-1).

#ifndef SBMSDP_MRA_REDUCTION_H_
#define SBMSDP_MRA_REDUCTION_H_

#include <Eigen/Dense>

namespace sbmsdp {

struct LiftedMatrix {
  Eigen::MatrixXd base;
  int k = 0;
  // nk x nk; diagonal blocks Z, off-diagonal blocks (J - Z)/(k - 1).
  Eigen::MatrixXd lifted;
};

LiftedMatrix build_lifted(const Eigen::MatrixXd& z, int k);

struct PsdEquivalence {
  double lhs_min_eig = 0.0;  // lambda_min(Z^(k))
  double rhs_min_eig = 0.0;  // lambda_min(Z - J/k)
  bool agree = false;
  // Z^(k) splits into J on the block-constant modes and (k/(k-1))(Z - J/k)
  // on the others, so lhs = min(0, k/(k-1) rhs) and only rhs carries a
  // margin. Set when |rhs| < tol.
  bool indeterminate = false;
};

constexpr double kDefaultPsdTol = 1e-8;

PsdEquivalence psd_equivalence_check(const Eigen::MatrixXd& z, int k,
                                     double tol = kDefaultPsdTol);

// Y = (k/(k-1)) Z - J/(k-1).
Eigen::MatrixXd change_of_variables(const Eigen::MatrixXd& z, int k);
// Z = ((k-1)/k) Y + J/k.
Eigen::MatrixXd inverse_change_of_variables(const Eigen::MatrixXd& y, int k);

}  // namespace sbmsdp

#endif  // SBMSDP_MRA_REDUCTION_H_
