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

// Monotone adversary: may only add edges inside clusters and remove edges
// across clusters.

#ifndef SBMSDP_ADVERSARY_H_
#define SBMSDP_ADVERSARY_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "sbmsdp/sbm_model.h"

namespace sbmsdp {

enum class ActionKind { kAddWithin, kRemoveAcross };

std::string_view to_string(ActionKind kind);
ActionKind parse_action_kind(std::string_view name);

struct AdversaryAction {
  ActionKind kind = ActionKind::kAddWithin;
  int i = 0;
  int j = 0;

  friend bool operator==(const AdversaryAction&, const AdversaryAction&) = default;
};

struct AdversaryLog {
  int r_plus = 0;
  int r_minus = 0;
  std::vector<AdversaryAction> actions;

  friend bool operator==(const AdversaryLog&, const AdversaryLog&) = default;
};

struct AdversaryOutcome {
  Graph graph;
  AdversaryLog log;
};

// Applies the actions in order, validating each against the evolving graph.
// Throws InvalidAction with the offending index.
AdversaryOutcome apply_actions(const Graph& graph, const Partition& partition,
                               const std::vector<AdversaryAction>& actions);

// Adds every absent within-cluster pair with probability add_prob and
// removes every present cross-cluster edge with probability remove_prob.
// Pairs are visited in lexicographic order with one draw each.
AdversaryOutcome random_monotone(const Graph& graph, const Partition& partition,
                                 double add_prob, double remove_prob,
                                 std::uint64_t seed);

// A(G_adv).Y*(P) - A(G).Y*(P) == 2 r_plus, in integer arithmetic.
bool objective_shift_check(const Graph& graph, const Graph& adversarial,
                           const AdversaryLog& log, const Partition& partition);

}  // namespace sbmsdp

#endif  // SBMSDP_ADVERSARY_H_
