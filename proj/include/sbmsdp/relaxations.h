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

// The two SDP relaxations of planted multisection, integrality detection and
// rounding back to a partition.
//
//   kBalancedRowSum:  max A.Y   s.t. Y_ii = 1, Y 1 = (n/k) 1, 0 <= Y_ij <= 1,
//                                    Y PSD
//   kMaxKCut:         max (2A - J).Y  s.t. Y_ii = 1, -1/(k-1) <= Y_ij <= 1,
//                                         Y PSD
//
// The upper bound Y_ij <= 1 is implied by PSD plus unit diagonal; it is kept
// explicit to help the first-order solver.

#ifndef SBMSDP_RELAXATIONS_H_
#define SBMSDP_RELAXATIONS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sbmsdp/dual_certificate.h"
#include "sbmsdp/sbm_model.h"
#include "sbmsdp/sdp_engine.h"

namespace sbmsdp {

enum class RelaxationKind { kBalancedRowSum, kMaxKCut };

std::string_view to_string(RelaxationKind kind);
// Accepts "balanced" and "maxkcut". Throws DomainError otherwise.
RelaxationKind parse_relaxation_kind(std::string_view name);

// Throws BadDimensions unless k >= 1 divides the vertex count.
SdpProblem build(RelaxationKind kind, const Graph& graph, int k);

struct IntegralityVerdict {
  bool is_integral = false;
  std::optional<Partition> recovered;
  double max_entry_deviation = 0.0;
  // Set only for kBalancedRowSum, after rebuilding the dual certificate on
  // the recovered partition.
  std::optional<bool> certificate_confirmed;
};

inline constexpr double kDefaultTolEntry = 0.05;

// Integral iff every entry is within tol_entry of the two integral values
// and the pattern thresholded at their midpoint is the co-membership matrix
// of an equipartition into k clusters.
IntegralityVerdict detect_integrality(const Eigen::MatrixXd& y,
                                      RelaxationKind kind, int k,
                                      double tol_entry = kDefaultTolEntry);

struct RoundingResult {
  std::optional<Partition> partition;  // empty on failure
  std::vector<int> component_sizes;    // sorted descending
};

// Thresholds Y at the kind-specific midpoint and takes connected components
// of the similarity graph. Succeeds iff there are exactly k components of
// equal size.
RoundingResult round_solution(const Eigen::MatrixXd& y, RelaxationKind kind,
                              int k);

// Midpoint between the two integral entry values of a relaxation.
double integral_threshold(RelaxationKind kind, int k);

struct RelaxationRun {
  SolveResult solve;
  IntegralityVerdict verdict;
  std::optional<CertReport> certificate;

  // kBalancedRowSum counts only certificate-confirmed integrality;
  // kMaxKCut has no certificate and counts the entrywise pattern.
  bool counts_as_integral(RelaxationKind kind) const;
};

// build -> solve -> detect_integrality -> (balanced only) certificate check.
RelaxationRun run_relaxation(RelaxationKind kind, const Graph& graph, int k,
                             const SolveSettings& settings = {},
                             double tol_entry = kDefaultTolEntry);

}  // namespace sbmsdp

#endif  // SBMSDP_RELAXATIONS_H_
