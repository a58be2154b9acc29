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

#include "sbmsdp/io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sbmsdp/errors.h"
#include "sbmsdp/random.h"

namespace sbmsdp {

namespace {

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// nlohmann reports the byte just past the offending token.
std::size_t error_byte(const nlohmann::json::parse_error& e) {
  return e.byte > 0 ? e.byte - 1 : 0;
}

template <typename T>
T field(const Json& object, const char* key) {
  if (!object.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  try {
    return object.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field \"") + key + "\" has the wrong type");
  }
}

Json double_or_null(double value) {
  return std::isfinite(value) ? Json(value) : Json(nullptr);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at " + location(text, error_byte(e)));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json instance_to_json(const SbmInstance& instance) {
  Json edges = Json::array();
  for (const auto& [i, j] : instance.graph.edges()) edges.push_back({i, j});
  return Json{{"n", instance.graph.num_vertices()},
              {"k", instance.params.k},
              {"m", instance.params.m},
              {"seed", instance.params.seed},
              {"alpha", instance.params.alpha},
              {"beta", instance.params.beta},
              {"edges", std::move(edges)},
              {"partition", instance.partition.assignment()},
              {"rng", kRngAlgorithm}};
}

SbmInstance instance_from_json(std::string_view text) {
  const Json root = parse_json(text);
  if (!root.is_object()) throw ParseError("instance must be a JSON object");
  try {
    SbmInstance instance;
    const int n = field<int>(root, "n");
    instance.params.k = field<int>(root, "k");
    instance.params.m = field<int>(root, "m");
    instance.params.seed = field<std::uint64_t>(root, "seed");
    instance.params.alpha = field<double>(root, "alpha");
    instance.params.beta = field<double>(root, "beta");
    if (n != instance.params.k * instance.params.m) {
      throw ParseError("n differs from k * m");
    }
    const auto pairs = field<std::vector<std::vector<int>>>(root, "edges");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& pair : pairs) {
      if (pair.size() != 2) throw ParseError("an edge must have two endpoints");
      edges.emplace_back(pair[0], pair[1]);
    }
    instance.graph = Graph(n, std::move(edges));
    instance.partition = Partition(field<std::vector<int>>(root, "partition"));
    if (instance.partition.num_vertices() != n ||
        instance.partition.num_clusters() != instance.params.k) {
      throw ParseError("partition does not match n and k");
    }
    return instance;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

SbmInstance read_instance_file(const std::string& path) {
  try {
    return instance_from_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_instance_file(const std::string& path, const SbmInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << instance_to_json(instance).dump() << '\n';
}

Json to_json(const ConditionReport& report) {
  return Json{{"lhs", report.lhs},
              {"rhs", report.rhs},
              {"c_hat", report.c_hat},
              {"satisfied", report.satisfied}};
}

Json to_json(const CertReport& report) {
  return Json{{"dual_objective", report.dual_objective},
              {"sum_delta_in", report.sum_delta_in},
              {"annihilation_residual", report.annihilation_residual},
              {"min_eig_orthogonal", double_or_null(report.min_eig_orthogonal)},
              {"z_min", report.z_min},
              {"verified", report.verified},
              {"unique", report.unique}};
}

Json to_json(const SolveResult& result) {
  return Json{{"objective", result.objective_value},
              {"iterations", result.iterations},
              {"primal_residual", result.primal_residual},
              {"dual_residual", result.dual_residual},
              {"status", result.status == SolveStatus::kConverged
                             ? "converged"
                             : "max_iter_reached"}};
}

Json to_json(const IntegralityVerdict& verdict) {
  Json out{{"is_integral", verdict.is_integral},
           {"max_entry_deviation", verdict.max_entry_deviation}};
  out["recovered"] = verdict.recovered
                         ? Json(verdict.recovered->assignment())
                         : Json(nullptr);
  out["certificate_confirmed"] = verdict.certificate_confirmed
                                     ? Json(*verdict.certificate_confirmed)
                                     : Json(nullptr);
  return out;
}

Json to_json(const AdversaryLog& log) {
  Json actions = Json::array();
  for (const AdversaryAction& a : log.actions) {
    actions.push_back({{"kind", to_string(a.kind)}, {"i", a.i}, {"j", a.j}});
  }
  return Json{{"r_plus", log.r_plus},
              {"r_minus", log.r_minus},
              {"actions", std::move(actions)}};
}

AdversaryLog adversary_log_from_json(std::string_view text) {
  const Json root = parse_json(text);
  const Json* list = &root;
  if (root.is_object()) {
    if (!root.contains("actions")) throw ParseError("missing field \"actions\"");
    list = &root.at("actions");
  }
  if (!list->is_array()) throw ParseError("actions must be an array");
  AdversaryLog log;
  for (const Json& entry : *list) {
    if (!entry.is_object()) throw ParseError("an action must be an object");
    AdversaryAction action;
    try {
      action.kind = parse_action_kind(field<std::string>(entry, "kind"));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    action.i = field<int>(entry, "i");
    action.j = field<int>(entry, "j");
    (action.kind == ActionKind::kAddWithin ? log.r_plus : log.r_minus)++;
    log.actions.push_back(action);
  }
  return log;
}

}  // namespace sbmsdp
