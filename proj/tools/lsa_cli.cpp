/*
 * Copyright 2026 The lsa-coord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: sweep, strategies, verify-lemmas.
// Exit codes: 0 success, 2 infeasible scenario, 1 any other error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lsa/channel/scenario.hpp"
#include "lsa/coordination/strategy.hpp"
#include "lsa/error.hpp"
#include "lsa/sim/lemma_oracle.hpp"
#include "lsa/sim/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

lsa::channel::ScenarioConfig config_or_default(const std::string& path) {
  return path.empty() ? lsa::channel::ScenarioConfig{} : lsa::channel::load_config(path);
}

struct SweepArgs {
  std::string axis;
  std::vector<double> points;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::string out;
  std::string plots;
  std::vector<std::string> schemes;
  unsigned workers = 0;
};

int run_sweep_cmd(const SweepArgs& a) {
  lsa::sim::SweepSpec spec;
  spec.axis = lsa::sim::parse_axis(a.axis);
  spec.points = a.points.empty() ? lsa::sim::default_points(spec.axis) : a.points;
  spec.base = config_or_default(a.config);
  if (a.seed) spec.base.seed = *a.seed;
  if (a.samples) spec.base.n_samples = *a.samples;
  if (!a.schemes.empty()) {
    spec.schemes.clear();
    for (const auto& s : a.schemes) spec.schemes.push_back(lsa::sim::parse_scheme(s));
  }
  spec.workers = a.workers;

  const lsa::sim::SweepTable table = lsa::sim::run_sweep(spec);
  lsa::sim::OutputPaths paths{a.out, std::nullopt};
  if (!a.plots.empty()) paths.plot_dir = a.plots;
  lsa::sim::emit_outputs(table, paths);

  std::size_t infeasible = 0;
  for (const auto& p : table.points) {
    if (!p.feasible) {
      ++infeasible;
      std::cerr << fmt::format("warning: {}={} is infeasible for tau1\n", lsa::sim::to_string(spec.axis),
                               p.axis_value);
    }
  }
  std::cout << fmt::format("wrote {} rows for {} points to {}\n", table.row_count(), table.points.size(), a.out);
  return infeasible == table.points.size() ? kExitInfeasible : kExitOk;
}

int run_strategies_cmd(const std::string& config) {
  const lsa::channel::ScenarioConfig cfg = config_or_default(config);
  const lsa::channel::CovarianceSet cov = lsa::channel::build_covariances(cfg);
  const lsa::coord::StrategyTable table = lsa::coord::select_strategy(cfg, cov);
  std::cout << fmt::format("{:>2}  {:<11} {:>12} {:>12} {:>10} {:>10}  {:<8} {}\n", "#", "strategy", "p1", "p2",
                           "bound_rx1", "bound_rx2", "feasible", "selected");
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const auto& s = table.entries[i];
    std::cout << fmt::format("{:>2}  {:<11} {:>12.6g} {:>12.6g} {:>10.6f} {:>10.6f}  {:<8} {}\n", i, s.name(), s.p1,
                             s.p2, s.incumbent_bound.value, s.licensee_bound.value, s.feasible ? "yes" : "no",
                             i == table.selected ? "*" : "");
  }
  return kExitOk;
}

int run_verify_cmd(std::size_t samples, std::size_t cases, std::uint64_t seed, unsigned workers) {
  const auto checks = lsa::sim::verify_lemmas(samples, cases, seed, workers);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    const bool ok = c.within(3.0);
    failed += ok ? 0 : 1;
    std::cout << fmt::format("{} dim={} closed={:.8f} mc={:.8f} se={:.2e} z={:+.2f} {}\n", c.lemma, c.dim,
                             c.closed_form, c.oracle.mean, c.oracle.std_error, c.z_score(), ok ? "PASS" : "FAIL");
  }
  std::cout << fmt::format("{}/{} checks within 3 se\n", checks.size() - failed, checks.size());
  return failed == 0 ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistically coordinated precoding for a two-pair LSA downlink"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep SNR or tau1 and write a CSV of all schemes");
  sweep_cmd->add_option("--axis", sweep.axis, "snr | tau1")->required()->check(CLI::IsMember({"snr", "tau1"}));
  sweep_cmd->add_option("--points", sweep.points, "Comma-separated axis values (default grid if omitted)")
      ->delimiter(',');
  sweep_cmd->add_option("--config", sweep.config, "Scenario config file");
  sweep_cmd->add_option("--seed", sweep.seed, "RNG seed (overrides config)");
  sweep_cmd->add_option("--samples", sweep.samples, "Monte Carlo draws per point (overrides config)");
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path")->required();
  sweep_cmd->add_option("--plots", sweep.plots, "Directory for SVG plots");
  sweep_cmd->add_option("--schemes", sweep.schemes, "Subset of coordinated,inttemp,benchmark")->delimiter(',');
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads (0 = all cores)");

  std::string strat_config;
  auto* strat_cmd = app.add_subcommand("strategies", "Print the 8-entry strategy table");
  strat_cmd->add_option("--config", strat_config, "Scenario config file");

  std::size_t verify_samples = 1000000;
  std::size_t verify_cases = 20;
  std::uint64_t verify_seed = 2026;
  unsigned verify_workers = 0;
  auto* verify_cmd = app.add_subcommand("verify-lemmas", "Compare closed forms against sampling oracles");
  verify_cmd->add_option("--samples", verify_samples, "Draws per check (10x for the ratio lemma)");
  verify_cmd->add_option("--cases", verify_cases, "Randomized inputs per lemma");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");
  verify_cmd->add_option("--workers", verify_workers, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sweep_cmd) return run_sweep_cmd(sweep);
    if (*strat_cmd) return run_strategies_cmd(strat_config);
    if (*verify_cmd) return run_verify_cmd(verify_samples, verify_cases, verify_seed, verify_workers);
  } catch (const lsa::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
