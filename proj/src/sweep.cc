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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "sbmsdp/bounds_lab.h"
#include "sbmsdp/errors.h"
#include "sbmsdp/random.h"
#include "sbmsdp/sbm_model.h"

namespace sbmsdp {

namespace {

double linspace(double lo, double hi, int steps, int index) {
  if (steps == 1) return lo;
  return lo + (hi - lo) * index / (steps - 1);
}

std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

bool cell_is_valid(const SweepGrid& grid, double alpha, double beta) {
  SbmParams params{alpha, beta, grid.k, grid.m, 0};
  try {
    params.validate();
    return true;
  } catch (const ParamOutOfRange&) {
    return false;
  }
}

struct TrialOutcome {
  bool integral = false;
  int iterations = 0;
};

}  // namespace

void SweepGrid::validate() const {
  if (alpha_steps < 1 || beta_steps < 1) {
    throw ParamOutOfRange("grid steps must be at least 1");
  }
  if (trials < 1) throw ParamOutOfRange("trials must be at least 1");
  if (alpha_max < alpha_min || beta_max < beta_min) {
    throw ParamOutOfRange("grid maximum below minimum");
  }
  if (k < 2 || m < 2) throw ParamOutOfRange("k and m must be at least 2");
}

double SweepGrid::alpha_at(int index) const {
  return linspace(alpha_min, alpha_max, alpha_steps, index);
}

double SweepGrid::beta_at(int index) const {
  return linspace(beta_min, beta_max, beta_steps, index);
}

std::vector<SweepCell> run_sweep(const SweepGrid& grid, const SweepOptions& options) {
  grid.validate();
  options.settings.validate();

  std::vector<SweepCell> cells(grid.num_cells());
  std::vector<int> tasks;  // cell indices with runnable trials
  for (int ia = 0; ia < grid.alpha_steps; ++ia) {
    for (int ib = 0; ib < grid.beta_steps; ++ib) {
      const int c = ia * grid.beta_steps + ib;
      SweepCell& cell = cells[c];
      cell.alpha = grid.alpha_at(ia);
      cell.beta = grid.beta_at(ib);
      cell.trials = grid.trials;
      cell.certified = grid.relaxation == RelaxationKind::kBalancedRowSum;
      cell.missing = !cell_is_valid(grid, cell.alpha, cell.beta);
      if (!cell.missing) tasks.push_back(c);
    }
  }

  const std::size_t total = tasks.size() * static_cast<std::size_t>(grid.trials);
  std::vector<TrialOutcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      const int c = tasks[job / grid.trials];
      const int t = static_cast<int>(job % grid.trials);
      try {
        SbmParams params{cells[c].alpha, cells[c].beta, grid.k, grid.m,
                         mix_seed(grid.base_seed, static_cast<std::uint64_t>(c),
                                  static_cast<std::uint64_t>(t))};
        const SbmInstance instance = sample_graph(params);
        const RelaxationRun run =
            run_relaxation(grid.relaxation, instance.graph, grid.k, options.settings);
        outcomes[job] = {run.counts_as_integral(grid.relaxation), run.solve.iterations};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t task = 0; task < tasks.size(); ++task) {
    SweepCell& cell = cells[tasks[task]];
    long long iterations = 0;
    for (int t = 0; t < grid.trials; ++t) {
      const TrialOutcome& o = outcomes[task * grid.trials + t];
      cell.integral_count += o.integral;
      iterations += o.iterations;
    }
    cell.fraction = static_cast<double>(cell.integral_count) / grid.trials;
    cell.mean_solver_iters = static_cast<double>(iterations) / grid.trials;
  }
  return cells;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << "alpha,beta,trials,integral_count,fraction,certified\n";
  for (const SweepCell& cell : cells) {
    out << num(cell.alpha) << ',' << num(cell.beta) << ',' << cell.trials << ',';
    if (!cell.missing) out << cell.integral_count << ',' << num(cell.fraction);
    else out << ',';
    out << ',' << (cell.certified ? "true" : "false") << '\n';
  }
}

void write_sweep_svg(std::ostream& out, const SweepGrid& grid,
                     const std::vector<SweepCell>& cells) {
  grid.validate();
  if (static_cast<int>(cells.size()) != grid.num_cells()) {
    throw BadDimensions("cell count does not match the grid");
  }
  const int cs = kSvgCellPixels;
  const int margin = kSvgMarginPixels;
  const int plot_w = grid.alpha_steps * cs;
  const int plot_h = grid.beta_steps * cs;
  const int width = plot_w + margin + 16;
  const int height = plot_h + margin + 16;
  const int top = 16;

  // Cell centres sit at value positions; the red curve uses the same map.
  auto x_of = [&](double alpha) {
    if (grid.alpha_steps == 1) return margin + cs / 2.0;
    return margin + cs / 2.0 +
           (alpha - grid.alpha_min) / (grid.alpha_max - grid.alpha_min) *
               (grid.alpha_steps - 1) * cs;
  };
  auto y_of = [&](double beta) {
    if (grid.beta_steps == 1) return top + plot_h - cs / 2.0;
    return top + plot_h - cs / 2.0 -
           (beta - grid.beta_min) / (grid.beta_max - grid.beta_min) *
               (grid.beta_steps - 1) * cs;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<defs><clipPath id=\"plot\"><rect x=\"" << margin << "\" y=\"" << top
      << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\"/></clipPath></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int ia = 0; ia < grid.alpha_steps; ++ia) {
    for (int ib = 0; ib < grid.beta_steps; ++ib) {
      const SweepCell& cell = cells[ia * grid.beta_steps + ib];
      std::string fill = "#add8e6";
      if (!cell.missing) {
        const int v = static_cast<int>(std::lround(255.0 * cell.fraction));
        fill = "rgb(" + std::to_string(v) + "," + std::to_string(v) + "," +
               std::to_string(v) + ")";
      }
      out << "<rect x=\"" << margin + ia * cs << "\" y=\""
          << top + plot_h - (ib + 1) * cs << "\" width=\"" << cs << "\" height=\""
          << cs << "\" fill=\"" << fill << "\"><title>alpha=" << num(cell.alpha)
          << " beta=" << num(cell.beta)
          << (cell.missing ? " missing" : " fraction=" + num(cell.fraction))
          << "</title></rect>\n";
    }
  }

  const double a_lo = std::max(1.0, grid.alpha_min);
  if (grid.alpha_max >= a_lo) {
    out << "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"red\" "
           "stroke-width=\"2\" points=\"";
    constexpr int kSamples = 200;
    for (int s = 0; s <= kSamples; ++s) {
      const double alpha = a_lo + (grid.alpha_max - a_lo) * s / kSamples;
      out << num(x_of(alpha)) << ',' << num(y_of(threshold_beta(alpha))) << ' ';
    }
    out << "\"/>\n";
  }

  out << "<rect x=\"" << margin << "\" y=\"" << top << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int ia = 0; ia < grid.alpha_steps; ++ia) {
    out << "<text x=\"" << num(x_of(grid.alpha_at(ia))) << "\" y=\""
        << top + plot_h + 14 << "\" text-anchor=\"middle\">"
        << num(std::round(grid.alpha_at(ia) * 100) / 100) << "</text>\n";
  }
  for (int ib = 0; ib < grid.beta_steps; ++ib) {
    out << "<text x=\"" << margin - 4 << "\" y=\"" << num(y_of(grid.beta_at(ib)) + 4)
        << "\" text-anchor=\"end\">" << num(std::round(grid.beta_at(ib) * 100) / 100)
        << "</text>\n";
  }
  out << "<text x=\"" << margin + plot_w / 2 << "\" y=\"" << height - 8
      << "\" text-anchor=\"middle\">alpha</text>\n";
  out << "<text x=\"14\" y=\"" << top + plot_h / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << top + plot_h / 2
      << ")\">beta</text>\n";
  out << "</svg>\n";
}

}  // namespace sbmsdp
