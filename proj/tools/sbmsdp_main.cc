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

// sbmsdp: generate planted-multisection instances, solve the SDP
// relaxations, check dual certificates, run the monotone adversary,
// evaluate the probability bounds and sweep phase diagrams.
//
// Every subcommand accepts --config FILE with one `key=value` per line
// ('#' starts a comment). Keys are long option names without dashes;
// options given on the command line take precedence.
//
// Exit codes: 0 success, 1 runtime failure (or `certify` not verified),
// 2 malformed input or command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbmsdp/adversary.h"
#include "sbmsdp/bounds_lab.h"
#include "sbmsdp/degree_stats.h"
#include "sbmsdp/dual_certificate.h"
#include "sbmsdp/errors.h"
#include "sbmsdp/io.h"
#include "sbmsdp/relaxations.h"
#include "sbmsdp/sbm_model.h"
#include "sbmsdp/sweep.h"

namespace {

using sbmsdp::Json;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Turns the --config file into --key=value arguments placed right after the
// subcommand name, so later command-line options override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw sbmsdp::ParseError("cannot open config file " + *path);
  std::vector<std::string> extra;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string content = trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos || trim(content.substr(0, eq)).empty()) {
      throw sbmsdp::ParseError(*path + ": line " + std::to_string(number) +
                               ": expected key=value");
    }
    extra.push_back("--" + trim(content.substr(0, eq)) + "=" +
                    trim(content.substr(eq + 1)));
  }
  const std::size_t at = args.size() > 1 ? 2 : 1;
  args.insert(args.begin() + at, extra.begin(), extra.end());
  return args;
}

void emit(const Json& value, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << value.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw sbmsdp::Error("cannot write " + path);
  out << value.dump(2) << '\n';
}

struct GenerateArgs {
  double alpha = 9.0;
  double beta = 1.0;
  int k = 3;
  int m = 20;
  std::uint64_t seed = 1;
  bool cliques = false;
  std::optional<std::uint64_t> shuffle;
  std::string output;
};

int cmd_generate(const GenerateArgs& a) {
  sbmsdp::SbmInstance instance;
  instance.params = {a.alpha, a.beta, a.k, a.m, a.seed};
  if (a.cliques) {
    instance.graph = sbmsdp::disjoint_cliques(a.k, a.m);
    instance.partition = sbmsdp::Partition::contiguous(a.k, a.m);
  } else {
    instance = sbmsdp::sample_graph(instance.params);
  }
  if (a.shuffle) instance = sbmsdp::shuffle_vertices(instance, *a.shuffle);
  if (a.output.empty() || a.output == "-") {
    std::cout << sbmsdp::instance_to_json(instance).dump() << '\n';
  } else {
    sbmsdp::write_instance_file(a.output, instance);
    std::cerr << "wrote " << a.output << " (n=" << instance.graph.num_vertices()
              << ", edges=" << instance.graph.num_edges() << ")\n";
  }
  return 0;
}

struct SolveArgs {
  std::string input;
  std::string sdp = "balanced";
  double tol = 1e-6;
  int max_iter = 20000;
  double tol_entry = sbmsdp::kDefaultTolEntry;
  std::string output;
};

int cmd_solve(const SolveArgs& a) {
  const sbmsdp::SbmInstance instance = sbmsdp::read_instance_file(a.input);
  const sbmsdp::RelaxationKind kind = sbmsdp::parse_relaxation_kind(a.sdp);
  sbmsdp::SolveSettings settings;
  settings.tol_primal = settings.tol_dual = a.tol;
  settings.max_iter = a.max_iter;
  const sbmsdp::RelaxationRun run = sbmsdp::run_relaxation(
      kind, instance.graph, instance.partition.num_clusters(), settings, a.tol_entry);
  Json out{{"sdp", sbmsdp::to_string(kind)},
           {"solve", sbmsdp::to_json(run.solve)},
           {"verdict", sbmsdp::to_json(run.verdict)}};
  if (run.certificate) out["certificate"] = sbmsdp::to_json(*run.certificate);
  out["integral"] = run.counts_as_integral(kind);
  if (run.verdict.recovered) {
    out["matches_planted"] = run.verdict.recovered->same_clustering(instance.partition);
  }
  emit(out, a.output);
  return 0;
}

struct CertifyArgs {
  std::string input;
  std::string partition = "planted";
  double strict_gap = sbmsdp::kDefaultStrictGap;
};

int cmd_certify(const CertifyArgs& a) {
  const sbmsdp::SbmInstance instance = sbmsdp::read_instance_file(a.input);
  sbmsdp::Partition partition = instance.partition;
  if (a.partition != "planted") {
    const Json root = sbmsdp::parse_json(sbmsdp::read_text_file(a.partition));
    const Json& labels = root.is_object() ? root.at("partition") : root;
    try {
      partition = sbmsdp::Partition(labels.get<std::vector<int>>());
    } catch (const nlohmann::json::exception&) {
      throw sbmsdp::ParseError(a.partition + ": partition must be an integer array");
    }
  }
  const sbmsdp::CertReport report = sbmsdp::verify_certificate(
      sbmsdp::build_certificate(instance.graph, partition), instance.graph,
      partition, a.strict_gap);
  std::cout << sbmsdp::to_json(report).dump(2) << '\n';
  return report.verified ? 0 : kExitFailure;
}

struct AdversaryArgs {
  std::string input;
  double add_prob = 0.3;
  double remove_prob = 0.3;
  std::uint64_t seed = 1;
  std::string actions;
  std::string output;
  std::string log;
};

int cmd_adversary(const AdversaryArgs& a) {
  const sbmsdp::SbmInstance instance = sbmsdp::read_instance_file(a.input);
  sbmsdp::AdversaryOutcome outcome;
  if (!a.actions.empty()) {
    const sbmsdp::AdversaryLog requested =
        sbmsdp::adversary_log_from_json(sbmsdp::read_text_file(a.actions));
    outcome = sbmsdp::apply_actions(instance.graph, instance.partition, requested.actions);
  } else {
    outcome = sbmsdp::random_monotone(instance.graph, instance.partition, a.add_prob,
                                      a.remove_prob, a.seed);
  }
  sbmsdp::SbmInstance adversarial = instance;
  adversarial.graph = outcome.graph;
  if (!a.output.empty()) sbmsdp::write_instance_file(a.output, adversarial);
  Json log = sbmsdp::to_json(outcome.log);
  log["objective_shift_ok"] = sbmsdp::objective_shift_check(
      instance.graph, outcome.graph, outcome.log, instance.partition);
  emit(log, a.log);
  return 0;
}

struct BoundsArgs {
  double mu = 10.0;
  double delta = 1.0;
  int t_m = 5;
  double t_p = 0.6;
  double t_q = 0.3;
  double t_delta = 1.0;
  long long trials = 100000;
  std::uint64_t seed = 1;
  double alpha = 4.0;
  double beta = 1.0;
  double epsilon = 0.5;
  double gamma = 0.0;
  double c = 2.0;
  double c2 = 1.0;
  double c_hat = sbmsdp::kDefaultCHat;
  int edelta_trials = 0;
  std::string input;
  bool json = false;
};

int cmd_bounds(const BoundsArgs& a) {
  Json out;
  out["chernoff"] = {
      {"mu", a.mu},
      {"delta", a.delta},
      {"upper", sbmsdp::chernoff_upper(a.mu, a.delta)},
      {"lower", a.delta <= 1.0 ? Json(sbmsdp::chernoff_lower(a.mu, a.delta)) : Json()},
      {"simplified_upper",
       a.delta <= 1.0 ? Json(sbmsdp::chernoff_simplified_upper(a.mu, a.delta)) : Json()},
      {"simplified_lower",
       a.delta <= 1.0 ? Json(sbmsdp::chernoff_simplified_lower(a.mu, a.delta)) : Json()}};
  const sbmsdp::MonteCarloEstimate mc =
      sbmsdp::t_statistic_mc(a.t_m, a.t_p, a.t_q, a.t_delta, a.trials, a.seed);
  out["t_statistic"] = {{"m", a.t_m},
                        {"p", a.t_p},
                        {"q", a.t_q},
                        {"delta", a.t_delta},
                        {"exact", sbmsdp::t_statistic_exact(a.t_m, a.t_p, a.t_q, a.t_delta)},
                        {"monte_carlo", mc.estimate},
                        {"std_error", mc.std_error},
                        {"trials", mc.trials}};
  out["rate"] = {{"alpha", a.alpha},
                 {"beta", a.beta},
                 {"epsilon", a.epsilon},
                 {"g", sbmsdp::g_function(a.alpha, a.beta, a.epsilon)},
                 {"threshold_beta",
                  a.alpha >= 1.0 ? Json(sbmsdp::threshold_beta(a.alpha)) : Json()},
                 {"threshold_gamma",
                  sbmsdp::threshold_gamma(a.alpha, a.beta, a.gamma, a.c)}};
  if (!a.input.empty()) {
    const sbmsdp::SbmInstance inst = sbmsdp::read_instance_file(a.input);
    const auto lam = sbmsdp::lambda_max_check(inst.graph, inst.partition, inst.params, a.c);
    const auto dev = sbmsdp::degree_deviation_check(inst.graph, inst.partition, inst.params);
    const auto gap =
        sbmsdp::optimality_gap_check(inst.graph, inst.partition, inst.params, a.c2);
    const auto profile = sbmsdp::compute_profile(inst.graph, inst.partition);
    Json instance{
        {"lambda_max", {{"empirical", lam.empirical}, {"bound", lam.bound}, {"holds", lam.holds}}},
        {"degree_sum", {{"max_cluster_out_sum", dev.out_sum_bound - dev.out_sum_slack()},
                        {"bound", dev.out_sum_bound},
                        {"holds", dev.out_sum_holds}}},
        {"pair_degree", {{"min_scaled", dev.min_pair_scaled},
                         {"bound", dev.pair_bound},
                         {"holds", dev.pair_holds}}},
        {"optimality_gap", {{"min_gap", gap.min_gap}, {"bound", gap.bound}, {"holds", gap.holds}}},
        {"condition_main",
         sbmsdp::to_json(sbmsdp::check_condition_main(profile, inst.params, a.c_hat))},
        {"condition_sdp2",
         sbmsdp::to_json(sbmsdp::check_condition_sdp2(profile, inst.params, a.c_hat))}};
    if (a.edelta_trials > 0) {
      const auto ed = sbmsdp::edelta_expectation_check(inst.params, a.edelta_trials, a.seed);
      instance["edelta"] = {{"empirical_mean", ed.empirical_mean},
                            {"bound", ed.bound},
                            {"holds", ed.holds}};
    }
    out["instance"] = std::move(instance);
  }
  if (a.json) {
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const auto& [section, values] : out.items()) {
    std::cout << section << '\n';
    for (const auto& [key, value] : values.items()) {
      if (value.is_object()) {
        for (const auto& [sub, v] : value.items()) {
          std::printf("  %-34s %s\n", (key + "." + sub).c_str(), v.dump().c_str());
        }
      } else {
        std::printf("  %-34s %s\n", key.c_str(), value.dump().c_str());
      }
    }
  }
  return 0;
}

struct SweepArgs {
  sbmsdp::SweepGrid grid;
  std::string sdp = "balanced";
  double tol = 1e-6;
  int max_iter = 20000;
  int threads = 0;
  std::string csv = "sweep.csv";
  std::string svg = "sweep.svg";
};

int cmd_sweep(SweepArgs a) {
  a.grid.relaxation = sbmsdp::parse_relaxation_kind(a.sdp);
  sbmsdp::SweepOptions options;
  options.settings.tol_primal = options.settings.tol_dual = a.tol;
  options.settings.max_iter = a.max_iter;
  options.threads = a.threads;
  const std::vector<sbmsdp::SweepCell> cells = sbmsdp::run_sweep(a.grid, options);
  std::ofstream csv(a.csv);
  if (!csv) throw sbmsdp::Error("cannot write " + a.csv);
  sbmsdp::write_sweep_csv(csv, cells);
  if (!a.svg.empty()) {
    std::ofstream svg(a.svg);
    if (!svg) throw sbmsdp::Error("cannot write " + a.svg);
    sbmsdp::write_sweep_svg(svg, a.grid, cells);
  }
  int missing = 0;
  for (const auto& cell : cells) missing += cell.missing;
  std::cerr << "swept " << cells.size() << " cells (" << missing
            << " missing) -> " << a.csv << (a.svg.empty() ? "" : ", " + a.svg) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planted multisection: SBM instances, SDP relaxations and certificates"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_all_flag("--help-all", "Expand help for every subcommand");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a planted-partition graph");
  generate->add_option("--alpha", gen.alpha, "p = alpha ln(m)/m")->capture_default_str();
  generate->add_option("--beta", gen.beta, "q = beta ln(m)/m")->capture_default_str();
  generate->add_option("--k", gen.k, "Number of clusters")->capture_default_str();
  generate->add_option("--m", gen.m, "Cluster size")->capture_default_str();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_flag("--cliques", gen.cliques, "Emit k disjoint cliques (p = 1, q = 0)");
  generate->add_option("--shuffle", gen.shuffle, "Relabel vertices with this seed");
  generate->add_option("-o,--output", gen.output, "Output JSON (default stdout)");

  SolveArgs sol;
  auto* solve = app.add_subcommand("solve", "Solve an SDP relaxation and test integrality");
  solve->add_option("input", sol.input, "Instance JSON")->required();
  solve->add_option("--sdp", sol.sdp, "balanced | maxkcut")->capture_default_str();
  solve->add_option("--tol", sol.tol, "Primal/dual residual tolerance")->capture_default_str();
  solve->add_option("--max-iter", sol.max_iter, "ADMM iteration cap")->capture_default_str();
  solve->add_option("--tol-entry", sol.tol_entry, "Integrality entry tolerance")
      ->capture_default_str();
  solve->add_option("-o,--output", sol.output, "Report JSON (default stdout)");

  CertifyArgs cer;
  auto* certify = app.add_subcommand(
      "certify", "Build and verify the dual certificate; exit 0 iff verified");
  certify->add_option("input", cer.input, "Instance JSON")->required();
  certify->add_option("--partition", cer.partition,
                      "'planted' or a JSON file holding a label array")
      ->capture_default_str();
  certify->add_option("--strict-gap", cer.strict_gap, "Eigenvalue gap for uniqueness")
      ->capture_default_str();

  AdversaryArgs adv;
  auto* adversary = app.add_subcommand("adversary", "Apply a monotone adversary");
  adversary->add_option("input", adv.input, "Instance JSON")->required();
  adversary->add_option("--add-prob", adv.add_prob, "Within-cluster addition probability")
      ->capture_default_str();
  adversary->add_option("--remove-prob", adv.remove_prob, "Cross-cluster removal probability")
      ->capture_default_str();
  adversary->add_option("--seed", adv.seed, "RNG seed")->capture_default_str();
  adversary->add_option("--actions", adv.actions,
                        "Apply the actions of this log JSON instead of sampling");
  adversary->add_option("-o,--output", adv.output, "Write the modified instance JSON");
  adversary->add_option("--log", adv.log, "Write the action log JSON (default stdout)");

  BoundsArgs bnd;
  auto* bounds = app.add_subcommand("bounds", "Evaluate tail bounds and rate functions");
  bounds->add_option("--mu", bnd.mu, "Chernoff mean")->capture_default_str();
  bounds->add_option("--delta", bnd.delta, "Chernoff deviation")->capture_default_str();
  bounds->add_option("--t-m", bnd.t_m, "T statistic: summands per side")->capture_default_str();
  bounds->add_option("--t-p", bnd.t_p, "T statistic: W probability")->capture_default_str();
  bounds->add_option("--t-q", bnd.t_q, "T statistic: Z probability")->capture_default_str();
  bounds->add_option("--t-delta", bnd.t_delta, "T statistic: threshold")->capture_default_str();
  bounds->add_option("--trials", bnd.trials, "Monte-Carlo trials")->capture_default_str();
  bounds->add_option("--seed", bnd.seed, "Monte-Carlo seed")->capture_default_str();
  bounds->add_option("--alpha", bnd.alpha, "Rate function alpha")->capture_default_str();
  bounds->add_option("--beta", bnd.beta, "Rate function beta")->capture_default_str();
  bounds->add_option("--epsilon", bnd.epsilon, "Rate function epsilon")->capture_default_str();
  bounds->add_option("--gamma", bnd.gamma, "k / ln m")->capture_default_str();
  bounds->add_option("--c", bnd.c, "Constant c (illustrative)")->capture_default_str();
  bounds->add_option("--c2", bnd.c2, "Constant c2 (illustrative)")->capture_default_str();
  bounds->add_option("--c-hat", bnd.c_hat, "Constant c-hat (illustrative)")
      ->capture_default_str();
  bounds->add_option("--edelta-trials", bnd.edelta_trials,
                     "Graphs sampled for the E[delta_out_max] check")
      ->capture_default_str();
  bounds->add_option("--input", bnd.input, "Also evaluate instance bounds on this JSON");
  bounds->add_flag("--json", bnd.json, "Print JSON instead of a table");

  SweepArgs swp;
  auto* sweep = app.add_subcommand(
      "sweep",
      "Phase-diagram sweep to CSV and SVG.\n"
      "SVG: one 32x32 px square per (alpha, beta) cell plus a 56 px axis margin;\n"
      "fill rgb(v,v,v) with v = round(255 * fraction), so lighter = more\n"
      "integral instances; light blue = invalid (p > 1 or beta >= alpha);\n"
      "red curve beta = (sqrt(alpha) - 1)^2.");
  sweep->add_option("--alpha-min", swp.grid.alpha_min)->capture_default_str();
  sweep->add_option("--alpha-max", swp.grid.alpha_max)->capture_default_str();
  sweep->add_option("--alpha-steps", swp.grid.alpha_steps)->capture_default_str();
  sweep->add_option("--beta-min", swp.grid.beta_min)->capture_default_str();
  sweep->add_option("--beta-max", swp.grid.beta_max)->capture_default_str();
  sweep->add_option("--beta-steps", swp.grid.beta_steps)->capture_default_str();
  sweep->add_option("--k", swp.grid.k)->capture_default_str();
  sweep->add_option("--m", swp.grid.m)->capture_default_str();
  sweep->add_option("--trials", swp.grid.trials, "Instances per cell")->capture_default_str();
  sweep->add_option("--seed", swp.grid.base_seed, "Base seed")->capture_default_str();
  sweep->add_option("--sdp", swp.sdp, "balanced | maxkcut")->capture_default_str();
  sweep->add_option("--tol", swp.tol, "Solver tolerance")->capture_default_str();
  sweep->add_option("--max-iter", swp.max_iter, "ADMM iteration cap")->capture_default_str();
  sweep->add_option("--threads", swp.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  sweep->add_option("--csv", swp.csv, "CSV output path")->capture_default_str();
  sweep->add_option("--svg", swp.svg, "SVG output path (empty to skip)")
      ->capture_default_str();

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  } catch (const sbmsdp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*solve) return cmd_solve(sol);
    if (*certify) return cmd_certify(cer);
    if (*adversary) return cmd_adversary(adv);
    if (*bounds) return cmd_bounds(bnd);
    if (*sweep) return cmd_sweep(swp);
  } catch (const sbmsdp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
