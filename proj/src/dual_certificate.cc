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

#include "sbmsdp/dual_certificate.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sbmsdp/degree_stats.h"
#include "sbmsdp/errors.h"
#include "sbmsdp/sdp_engine.h"

namespace sbmsdp {

double DualCertificate::dual_objective() const {
  return d.sum() + 2.0 * cluster_size * x.sum();
}

DualCertificate build_certificate(const Graph& graph, const Partition& partition) {
  const DegreeProfile profile = compute_profile(graph, partition);
  const int n = graph.num_vertices();
  const double m = partition.cluster_size();
  const double m2 = m * m;
  const double pmin = profile.min_cross_pair_degree();

  DualCertificate cert;
  cert.cluster_size = partition.cluster_size();
  cert.x.resize(n);
  cert.d.resize(n);
  for (int i = 0; i < n; ++i) {
    cert.x(i) = profile.delta_out_max[i] / m - pmin / (2.0 * m2);
  }
  for (int i = 0; i < n; ++i) {
    double cluster_out = 0.0;
    for (int j : partition.members(partition.cluster_of(i))) {
      cluster_out += profile.delta_out_max[j];
    }
    cert.d(i) = profile.delta_in[i] - profile.delta_out_max[i] - cluster_out / m +
                pmin / m;
  }

  cert.z = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int pi = partition.cluster_of(i);
    for (int j = 0; j < n; ++j) {
      const int pj = partition.cluster_of(j);
      if (pi == pj) continue;
      cert.z(i, j) =
          (profile.delta_out_max[i] - profile.delta_to_cluster(i, pj)) / m +
          (profile.delta_out_max[j] - profile.delta_to_cluster(j, pi)) / m +
          (profile.pair_degree(pj, pi) - pmin) / m2;
    }
  }

  // x_i + x_j is formed first so that M is exactly symmetric.
  const Eigen::MatrixXd x_sum =
      cert.x.replicate(1, n) + cert.x.transpose().replicate(n, 1);
  cert.m = x_sum - graph.adjacency() - cert.z;
  cert.m.diagonal() += cert.d;
  return cert;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> scaled_z_numerators(
    const Graph& graph, const Partition& partition) {
  const DegreeProfile profile = compute_profile(graph, partition);
  const int n = graph.num_vertices();
  const std::int64_t m = partition.cluster_size();
  const std::int64_t pmin = profile.min_cross_pair_degree();
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> z =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int pi = partition.cluster_of(i);
    for (int j = 0; j < n; ++j) {
      const int pj = partition.cluster_of(j);
      if (pi == pj) continue;
      z(i, j) = m * (profile.delta_out_max[i] - profile.delta_to_cluster(i, pj)) +
                m * (profile.delta_out_max[j] - profile.delta_to_cluster(j, pi)) +
                (profile.pair_degree(pj, pi) - pmin);
    }
  }
  return z;
}

Eigen::MatrixXd subspace_basis(const Partition& partition) {
  const int n = partition.num_vertices();
  const int k = partition.num_clusters();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n - k);
  int col = 0;
  for (int t = 0; t < k; ++t) {
    const auto& members = partition.members(t);
    for (std::size_t r = 1; r < members.size(); ++r, ++col) {
      const double scale = 1.0 / std::sqrt(static_cast<double>(r * (r + 1)));
      for (std::size_t s = 0; s < r; ++s) q(members[s], col) = scale;
      q(members[r], col) = -static_cast<double>(r) * scale;
    }
  }
  return q;
}

CertReport verify_certificate(const DualCertificate& cert, const Graph& graph,
                              const Partition& partition, double strict_gap) {
  if (partition.num_vertices() != graph.num_vertices() ||
      cert.m.rows() != graph.num_vertices()) {
    throw MismatchedPartition("certificate, graph and partition sizes differ");
  }
  CertReport report;
  report.dual_objective = cert.dual_objective();
  report.sum_delta_in = 2 * static_cast<long long>(within_edge_count(graph, partition));
  report.objective_match =
      std::abs(report.dual_objective - static_cast<double>(report.sum_delta_in)) <=
      1e-9 * std::max(1.0, static_cast<double>(report.sum_delta_in));

  for (int t = 0; t < partition.num_clusters(); ++t) {
    const Eigen::VectorXd mv = cert.m * partition.indicator(t);
    report.annihilation_residual =
        std::max(report.annihilation_residual, mv.cwiseAbs().maxCoeff());
  }

  report.z_min = cert.z.size() > 0 ? cert.z.minCoeff() : 0.0;

  const Eigen::MatrixXd q = subspace_basis(partition);
  if (q.cols() > 0) {
    const Eigen::MatrixXd compressed = q.transpose() * cert.m * q;
    report.min_eig_orthogonal =
        min_eigenvalue(0.5 * (compressed + compressed.transpose()));
  } else {
    report.min_eig_orthogonal = std::numeric_limits<double>::infinity();
  }

  report.verified = report.z_min >= -1e-12 &&
                    report.annihilation_residual <= 1e-9 &&
                    report.min_eig_orthogonal >= -1e-9 && report.objective_match;
  report.unique = report.verified && report.min_eig_orthogonal > strict_gap;
  return report;
}

}  // namespace sbmsdp
