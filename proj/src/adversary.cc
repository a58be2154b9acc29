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

#include "sbmsdp/adversary.h"

#include <set>
#include <string>

#include "sbmsdp/errors.h"
#include "sbmsdp/random.h"

namespace sbmsdp {

std::string_view to_string(ActionKind kind) {
  return kind == ActionKind::kAddWithin ? "add_within" : "remove_across";
}

ActionKind parse_action_kind(std::string_view name) {
  if (name == "add_within") return ActionKind::kAddWithin;
  if (name == "remove_across") return ActionKind::kRemoveAcross;
  throw DomainError("unknown action kind '" + std::string(name) + "'");
}

AdversaryOutcome apply_actions(const Graph& graph, const Partition& partition,
                               const std::vector<AdversaryAction>& actions) {
  const int n = graph.num_vertices();
  if (partition.num_vertices() != n) {
    throw MismatchedPartition("partition does not match the graph");
  }
  std::set<Edge> edges(graph.edges().begin(), graph.edges().end());
  AdversaryLog log;
  for (std::size_t idx = 0; idx < actions.size(); ++idx) {
    const AdversaryAction& action = actions[idx];
    if (action.i < 0 || action.j < 0 || action.i >= n || action.j >= n) {
      throw InvalidAction(idx, "endpoint out of range");
    }
    if (action.i == action.j) throw InvalidAction(idx, "self loop");
    const Edge e = std::minmax(action.i, action.j);
    const bool same = partition.cluster_of(e.first) == partition.cluster_of(e.second);
    const bool present = edges.count(e) > 0;
    if (action.kind == ActionKind::kAddWithin) {
      if (!same) throw InvalidAction(idx, "addition across clusters");
      if (present) throw InvalidAction(idx, "edge already present");
      edges.insert(e);
      ++log.r_plus;
    } else {
      if (same) throw InvalidAction(idx, "removal inside a cluster");
      if (!present) throw InvalidAction(idx, "edge absent");
      edges.erase(e);
      ++log.r_minus;
    }
    log.actions.push_back(action);
  }
  return {Graph(n, std::vector<Edge>(edges.begin(), edges.end())), std::move(log)};
}

AdversaryOutcome random_monotone(const Graph& graph, const Partition& partition,
                                 double add_prob, double remove_prob,
                                 std::uint64_t seed) {
  if (!(add_prob >= 0.0 && add_prob <= 1.0 && remove_prob >= 0.0 &&
        remove_prob <= 1.0)) {
    throw DomainError("adversary probabilities must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<AdversaryAction> actions;
  const int n = graph.num_vertices();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool same = partition.cluster_of(i) == partition.cluster_of(j);
      const bool present = graph.has_edge(i, j);
      if (same && !present && rng.bernoulli(add_prob)) {
        actions.push_back({ActionKind::kAddWithin, i, j});
      } else if (!same && present && rng.bernoulli(remove_prob)) {
        actions.push_back({ActionKind::kRemoveAcross, i, j});
      }
    }
  }
  return apply_actions(graph, partition, actions);
}

bool objective_shift_check(const Graph& graph, const Graph& adversarial,
                           const AdversaryLog& log, const Partition& partition) {
  // A.Y*(P) counts every within-cluster edge twice.
  const long long before = 2 * static_cast<long long>(within_edge_count(graph, partition));
  const long long after =
      2 * static_cast<long long>(within_edge_count(adversarial, partition));
  return after - before == 2LL * log.r_plus;
}

}  // namespace sbmsdp
