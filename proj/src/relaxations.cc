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

#include <algorithm>
#include <cmath>
#include <functional>

#include "sbmsdp/errors.h"

namespace sbmsdp {

std::string_view to_string(RelaxationKind kind) {
  switch (kind) {
    case RelaxationKind::kBalancedRowSum:
      return "balanced";
    case RelaxationKind::kMaxKCut:
      return "maxkcut";
  }
  return "unknown";
}

RelaxationKind parse_relaxation_kind(std::string_view name) {
  if (name == "balanced") return RelaxationKind::kBalancedRowSum;
  if (name == "maxkcut") return RelaxationKind::kMaxKCut;
  throw DomainError("unknown relaxation '" + std::string(name) +
                    "' (expected balanced or maxkcut)");
}

SdpProblem build(RelaxationKind kind, const Graph& graph, int k) {
  const int n = graph.num_vertices();
  if (k < 1 || n < 1 || n % k != 0) {
    throw BadDimensions("k = " + std::to_string(k) + " does not divide n = " +
                        std::to_string(n));
  }
  SdpProblem problem;
  problem.diag_value = 1.0;
  problem.elem_upper = 1.0;
  const Eigen::MatrixXd a = graph.adjacency();
  switch (kind) {
    case RelaxationKind::kBalancedRowSum:
      problem.objective = a;
      problem.row_sum = static_cast<double>(n / k);
      problem.elem_lower = 0.0;
      break;
    case RelaxationKind::kMaxKCut:
      if (k < 2) throw BadDimensions("the max-k-cut relaxation needs k >= 2");
      problem.objective = 2.0 * a - Eigen::MatrixXd::Ones(n, n);
      problem.elem_lower = -1.0 / (k - 1);
      break;
  }
  return problem;
}

double integral_threshold(RelaxationKind kind, int k) {
  switch (kind) {
    case RelaxationKind::kBalancedRowSum:
      return 0.5;
    case RelaxationKind::kMaxKCut:
      return (k - 2.0) / (2.0 * (k - 1.0));
  }
  return 0.5;
}

namespace {

double low_value(RelaxationKind kind, int k) {
  return kind == RelaxationKind::kMaxKCut ? -1.0 / (k - 1) : 0.0;
}

// Labels vertices by their thresholded row pattern. Returns an empty
// assignment unless the pattern is an equivalence relation.
std::vector<int> pattern_classes(const Eigen::MatrixXd& y, double threshold) {
  const int n = static_cast<int>(y.rows());
  std::vector<int> label(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (label[i] != -1) continue;
    label[i] = next;
    for (int j = i + 1; j < n; ++j) {
      if (y(i, j) > threshold) {
        if (label[j] != -1) return {};
        label[j] = next;
      }
    }
    ++next;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (y(i, j) > threshold) != (label[i] == label[j])) return {};
    }
  }
  return label;
}

}  // namespace

IntegralityVerdict detect_integrality(const Eigen::MatrixXd& y,
                                      RelaxationKind kind, int k,
                                      double tol_entry) {
  IntegralityVerdict verdict;
  const double hi = 1.0;
  const double lo = low_value(kind, k);
  verdict.max_entry_deviation =
      y.unaryExpr([&](double v) { return std::min(std::abs(v - hi), std::abs(v - lo)); })
          .maxCoeff();
  std::vector<int> labels = pattern_classes(y, integral_threshold(kind, k));
  if (labels.empty()) return verdict;
  const int classes = *std::max_element(labels.begin(), labels.end()) + 1;
  if (classes != k) return verdict;
  try {
    Partition recovered(std::move(labels));
    verdict.is_integral = verdict.max_entry_deviation <= tol_entry;
    if (verdict.is_integral) verdict.recovered = std::move(recovered);
  } catch (const MismatchedPartition&) {
    // Unequal cluster sizes: not an equipartition.
  }
  return verdict;
}

RoundingResult round_solution(const Eigen::MatrixXd& y, RelaxationKind kind,
                              int k) {
  const int n = static_cast<int>(y.rows());
  const double threshold = integral_threshold(kind, k);
  std::vector<int> component(n, -1);
  std::vector<int> sizes;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (component[root] != -1) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (int w = 0; w < n; ++w) {
        if (w != v && component[w] == -1 && y(v, w) > threshold) {
          component[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  RoundingResult result;
  result.component_sizes = sizes;
  std::sort(result.component_sizes.begin(), result.component_sizes.end(),
            std::greater<>());
  const bool balanced =
      static_cast<int>(sizes.size()) == k &&
      std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes[0]; });
  if (balanced) result.partition = Partition(std::move(component));
  return result;
}

bool RelaxationRun::counts_as_integral(RelaxationKind kind) const {
  if (!verdict.is_integral) return false;
  if (kind == RelaxationKind::kBalancedRowSum) {
    return verdict.certificate_confirmed.value_or(false);
  }
  return true;
}

RelaxationRun run_relaxation(RelaxationKind kind, const Graph& graph, int k,
                             const SolveSettings& settings, double tol_entry) {
  RelaxationRun run;
  run.solve = solve(build(kind, graph, k), settings);
  run.verdict = detect_integrality(run.solve.y, kind, k, tol_entry);
  if (kind == RelaxationKind::kBalancedRowSum && run.verdict.recovered) {
    const Partition& recovered = *run.verdict.recovered;
    run.certificate = verify_certificate(build_certificate(graph, recovered),
                                         graph, recovered);
    run.verdict.certificate_confirmed = run.certificate->verified;
  } else if (kind == RelaxationKind::kBalancedRowSum) {
    run.verdict.certificate_confirmed = false;
  }
  return run;
}

}  // namespace sbmsdp
