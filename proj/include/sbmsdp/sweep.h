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

// Phase-diagram sweeps over (alpha, beta): the fraction of sampled
// instances on which a relaxation is integral, written as CSV and as a
// greyscale SVG heatmap.

#ifndef SBMSDP_SWEEP_H_
#define SBMSDP_SWEEP_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "sbmsdp/relaxations.h"
#include "sbmsdp/sdp_engine.h"

namespace sbmsdp {

struct SweepGrid {
  double alpha_min = 0.0;
  double alpha_max = 20.0;
  int alpha_steps = 20;
  double beta_min = 0.0;
  double beta_max = 20.0;
  int beta_steps = 20;
  int k = 3;
  int m = 20;
  int trials = 10;
  std::uint64_t base_seed = 0;
  RelaxationKind relaxation = RelaxationKind::kBalancedRowSum;

  // Throws ParamOutOfRange on empty ranges, steps < 1, trials < 1 or an
  // invalid (k, m).
  void validate() const;
  // Evenly spaced, endpoints included; a single step sits at the minimum.
  double alpha_at(int index) const;
  double beta_at(int index) const;
  int num_cells() const { return alpha_steps * beta_steps; }
};

struct SweepCell {
  double alpha = 0.0;
  double beta = 0.0;
  int trials = 0;
  int integral_count = 0;
  double fraction = 0.0;
  double mean_solver_iters = 0.0;
  // (alpha, beta) gives no valid model (p > 1 or beta >= alpha); no trials
  // were run.
  bool missing = false;
  // Integral counts are backed by dual certificates (balanced relaxation).
  bool certified = false;
};

struct SweepOptions {
  SolveSettings settings;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
};

// Cells are ordered alpha-major (cell index = ia * beta_steps + ib). Trial t
// of cell c samples with seed mix_seed(base_seed, c, t). Output does not
// depend on the thread count.
std::vector<SweepCell> run_sweep(const SweepGrid& grid,
                                 const SweepOptions& options = {});

// Header alpha,beta,trials,integral_count,fraction,certified. Missing cells
// leave integral_count and fraction empty.
void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells);

inline constexpr int kSvgCellPixels = 32;
inline constexpr int kSvgMarginPixels = 56;

// One kSvgCellPixels square per cell, alpha left to right and beta bottom to
// top, filled rgb(v, v, v) with v = round(255 * fraction) so lighter means a
// higher fraction. Missing cells are light blue. The curve
// beta = (sqrt(alpha) - 1)^2 is drawn in red through the cell centres.
void write_sweep_svg(std::ostream& out, const SweepGrid& grid,
                     const std::vector<SweepCell>& cells);

}  // namespace sbmsdp

#endif  // SBMSDP_SWEEP_H_
