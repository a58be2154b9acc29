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

// JSON interchange for instances and reports.
//
// Instance format:
//   {"n": int, "k": int, "m": int, "seed": int, "alpha": float,
//    "beta": float, "edges": [[i, j], ...], "partition": [int, ...],
//    "rng": "mt19937_64/splitmix64"}
// Edges are written with i < j in lexicographic order. "rng" is optional on
// input.

#ifndef SBMSDP_IO_H_
#define SBMSDP_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "sbmsdp/adversary.h"
#include "sbmsdp/degree_stats.h"
#include "sbmsdp/dual_certificate.h"
#include "sbmsdp/relaxations.h"
#include "sbmsdp/sbm_model.h"
#include "sbmsdp/sdp_engine.h"

namespace sbmsdp {

using Json = nlohmann::ordered_json;

Json instance_to_json(const SbmInstance& instance);
// Throws ParseError. Malformed text is reported by line and column.
SbmInstance instance_from_json(std::string_view text);

SbmInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const SbmInstance& instance);

Json to_json(const ConditionReport& report);
Json to_json(const CertReport& report);
// Omits the iterate Y and the residual history.
Json to_json(const SolveResult& result);
Json to_json(const IntegralityVerdict& verdict);
Json to_json(const AdversaryLog& log);
AdversaryLog adversary_log_from_json(std::string_view text);

// Parses text into JSON, converting parser failures into ParseError with a
// "line L, column C" diagnostic.
Json parse_json(std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace sbmsdp

#endif  // SBMSDP_IO_H_
