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

#include <gtest/gtest.h>

#include "sbmsdp/errors.h"
#include "sbmsdp/random.h"

namespace sbmsdp {
namespace {

TEST(InstanceJson, RoundTrip) {
  const SbmInstance inst = shuffle_vertices(sample_graph({3.0, 1.0, 3, 7, 42}), 3);
  const Json j = instance_to_json(inst);
  EXPECT_EQ(j["rng"], kRngAlgorithm);
  EXPECT_EQ(j["n"], 21);
  const SbmInstance back = instance_from_json(j.dump());
  EXPECT_EQ(back.graph, inst.graph);
  EXPECT_EQ(back.partition, inst.partition);
  EXPECT_EQ(back.params.seed, 42u);
  EXPECT_EQ(back.params.alpha, 3.0);
  EXPECT_EQ(back.params.k, 3);
}

TEST(InstanceJson, EdgesSortedWithSmallerEndpointFirst) {
  const Json j = instance_to_json(
      {SbmParams{1.0, 0.0, 2, 2, 0}, Graph(4, {{3, 2}, {1, 0}}), Partition::contiguous(2, 2)});
  EXPECT_EQ(j["edges"].dump(), "[[0,1],[2,3]]");
}

TEST(InstanceJson, MalformedTextReportsLineAndColumn) {
  try {
    instance_from_json("{\n  \"n\": 4,\n  \"k\" 2\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(InstanceJson, SemanticErrors) {
  const std::string base =
      R"({"n": 4, "k": 2, "m": 2, "seed": 0, "alpha": 1, "beta": 0, )";
  EXPECT_THROW(instance_from_json(base + R"("edges": [[0, 0]], "partition": [0,0,1,1]})"),
               ParseError);
  EXPECT_THROW(instance_from_json(base + R"("edges": [], "partition": [0,0,0,1]})"),
               ParseError);
  EXPECT_THROW(instance_from_json(base + R"("edges": [[0, 1, 2]], "partition": [0,0,1,1]})"),
               ParseError);
  EXPECT_THROW(instance_from_json(base + R"("edges": "none", "partition": [0,0,1,1]})"),
               ParseError);
  EXPECT_THROW(instance_from_json(R"({"n": 4})"), ParseError);
  EXPECT_NO_THROW(instance_from_json(base + R"("edges": [[1, 0]], "partition": [1,1,0,0]})"));
}

TEST(ReportJson, CertReportFields) {
  CertReport r;
  r.dual_objective = 12;
  r.verified = true;
  const Json j = to_json(r);
  for (const char* key : {"dual_objective", "annihilation_residual", "min_eig_orthogonal",
                          "z_min", "verified", "unique"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verified"], true);
}

TEST(ReportJson, ConditionReportFields) {
  const Json j = to_json(ConditionReport{1.5, 2.0, 0.5, false});
  EXPECT_EQ(j.dump(), R"({"lhs":1.5,"rhs":2.0,"c_hat":0.5,"satisfied":false})");
}

TEST(AdversaryLogJson, RoundTrip) {
  AdversaryLog log;
  log.actions = {{ActionKind::kAddWithin, 0, 1}, {ActionKind::kRemoveAcross, 2, 5}};
  log.r_plus = 1;
  log.r_minus = 1;
  EXPECT_EQ(adversary_log_from_json(to_json(log).dump()), log);
  EXPECT_THROW(adversary_log_from_json(R"({"actions": [{"kind": "flip", "i": 0, "j": 1}]})"),
               ParseError);
}

}  // namespace
}  // namespace sbmsdp
