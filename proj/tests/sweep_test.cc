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

#include "sbmsdp/sweep.h"

#include <sstream>

#include <gtest/gtest.h>

#include "sbmsdp/errors.h"

namespace sbmsdp {
namespace {

SweepGrid single_cell(double alpha, double beta) {
  SweepGrid grid;
  grid.alpha_min = grid.alpha_max = alpha;
  grid.beta_min = grid.beta_max = beta;
  grid.alpha_steps = grid.beta_steps = 1;
  grid.k = 3;
  grid.m = 20;
  grid.trials = 10;
  grid.base_seed = 1;
  return grid;
}

TEST(SweepGrid, Validation) {
  SweepGrid grid;
  EXPECT_NO_THROW(grid.validate());
  grid.trials = 0;
  EXPECT_THROW(grid.validate(), ParamOutOfRange);
  grid.trials = 1;
  grid.alpha_steps = 0;
  EXPECT_THROW(grid.validate(), ParamOutOfRange);
  grid.alpha_steps = 3;
  EXPECT_DOUBLE_EQ(grid.alpha_at(1), 10.0);
}

TEST(Sweep, RecoveryRegimeCell) {
  // sqrt(6.5) - sqrt(0.5) = 1.84 > 1.
  const std::vector<SweepCell> cells = run_sweep(single_cell(6.5, 0.5));
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_FALSE(cells[0].missing);
  EXPECT_GE(cells[0].fraction, 0.8);
  EXPECT_TRUE(cells[0].certified);
}

TEST(Sweep, BelowThresholdCell) {
  const std::vector<SweepCell> cells = run_sweep(single_cell(1.2, 1.0));
  EXPECT_LE(cells[0].fraction, 0.2);
  EXPECT_EQ(cells[0].fraction, cells[0].integral_count / 10.0);
}

TEST(Sweep, InvalidCellsAreMissing) {
  const std::vector<SweepCell> cells = run_sweep(single_cell(9.0, 0.5));
  EXPECT_TRUE(cells[0].missing);
  std::ostringstream csv;
  write_sweep_csv(csv, cells);
  EXPECT_EQ(csv.str(), "alpha,beta,trials,integral_count,fraction,certified\n9,0.5,10,,,true\n");
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  SweepGrid grid = single_cell(2.0, 0.0);
  grid.alpha_max = 5.0;
  grid.alpha_steps = 2;
  grid.beta_max = 1.5;
  grid.beta_steps = 2;
  grid.trials = 3;
  grid.m = 10;
  grid.relaxation = RelaxationKind::kMaxKCut;
  SweepOptions one;
  one.threads = 1;
  SweepOptions four;
  four.threads = 4;
  std::ostringstream a, b;
  write_sweep_csv(a, run_sweep(grid, one));
  write_sweep_csv(b, run_sweep(grid, four));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find(",false\n"), std::string::npos);
}

TEST(SweepSvg, GreyscaleAndCurve) {
  SweepGrid grid;
  grid.alpha_min = 1;
  grid.alpha_max = 7;
  grid.alpha_steps = 2;
  grid.beta_min = 0;
  grid.beta_max = 1;
  grid.beta_steps = 2;
  std::vector<SweepCell> cells(4);
  cells[0].fraction = 1.0;
  cells[1].fraction = 0.0;
  cells[2].missing = true;
  cells[3].fraction = 0.5;
  std::ostringstream svg;
  write_sweep_svg(svg, grid, cells);
  const std::string s = svg.str();
  EXPECT_NE(s.find("rgb(255,255,255)"), std::string::npos);
  EXPECT_NE(s.find("rgb(0,0,0)"), std::string::npos);
  EXPECT_NE(s.find("rgb(128,128,128)"), std::string::npos);
  EXPECT_NE(s.find("stroke=\"red\""), std::string::npos);
  // At alpha = 4 the curve passes through beta = 1: x = 56 + 16 + 16,
  // y = 16 + 64 - 16 - 32.
  EXPECT_NE(s.find(" 88,32 "), std::string::npos);
}

}  // namespace
}  // namespace sbmsdp
