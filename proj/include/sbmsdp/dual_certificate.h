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

// Explicit dual certificate for the balanced row-sum relaxation.
//
// For a graph G and equipartition P with cluster size m, let
//   dmax(i) = delta_out_max(i),  d(i, t) = delta_{i -> P_t},
//   pair(s, t) = delta_{P_s -> P_t},  pmin = min_{s != t} pair(s, t).
// The certificate is
//   Z[i][j] = (dmax(i) - d(i, P(j))) / m + (dmax(j) - d(j, P(i))) / m
//             + (pair(P(j), P(i)) - pmin) / m^2           for P(i) != P(j),
//   Z[i][j] = 0                                            otherwise,
//   x_i     = dmax(i) / m - pmin / (2 m^2),
//   D_ii    = delta_in(i) - dmax(i) - sum_{j in P(i)} dmax(j) / m + pmin / m,
// and the slack matrix is M = D + sum_i x_i (R_i + C_i) - A - Z, where R_i
// (C_i) is the all-ones row (column) i. M annihilates every cluster
// indicator by construction; the certificate proves Y* optimal iff M is PSD
// on the complement R_{n|k} of the indicators' span, and unique when M is
// positive definite there.

#ifndef SBMSDP_DUAL_CERTIFICATE_H_
#define SBMSDP_DUAL_CERTIFICATE_H_

#include <cstdint>

#include <Eigen/Dense>

#include "sbmsdp/sbm_model.h"

namespace sbmsdp {

struct DualCertificate {
  Eigen::VectorXd d;  // diagonal of D*
  Eigen::VectorXd x;
  Eigen::MatrixXd z;
  Eigen::MatrixXd m;  // slack matrix M*
  int cluster_size = 0;

  // Trace(D*) + (2n/k) sum_i x_i.
  double dual_objective() const;
};

// Throws MismatchedPartition if the partition does not match the graph.
DualCertificate build_certificate(const Graph& graph, const Partition& partition);

// Exact form of Z scaled by m^2; every entry is a nonnegative integer.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> scaled_z_numerators(
    const Graph& graph, const Partition& partition);

struct CertReport {
  double dual_objective = 0.0;
  long long sum_delta_in = 0;
  // max_t ||M v_t||_inf
  double annihilation_residual = 0.0;
  // smallest eigenvalue of Q' M Q, Q an orthonormal basis of R_{n|k}
  double min_eig_orthogonal = 0.0;
  double z_min = 0.0;
  bool objective_match = false;
  bool verified = false;
  bool unique = false;
};

inline constexpr double kDefaultStrictGap = 1e-6;

// verified: z_min >= -1e-12, annihilation <= 1e-9, min_eig_orthogonal >= -1e-9
// and the dual objective equals sum_i delta_in(i) within 1e-9.
// unique: verified and min_eig_orthogonal > strict_gap.
CertReport verify_certificate(const DualCertificate& cert, const Graph& graph,
                              const Partition& partition,
                              double strict_gap = kDefaultStrictGap);

// n x (n - k) orthonormal basis of the vectors summing to zero on every
// cluster. Each column is a Helmert contrast supported on one cluster.
Eigen::MatrixXd subspace_basis(const Partition& partition);

}  // namespace sbmsdp

#endif  // SBMSDP_DUAL_CERTIFICATE_H_
