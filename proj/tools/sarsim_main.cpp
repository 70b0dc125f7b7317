#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sarsim/config.hpp"
#include "sarsim/harness.hpp"
#include "sarsim/heterogeneity.hpp"
#include "sarsim/metrics.hpp"
#include "sarsim/report.hpp"
#include "sarsim/simulation.hpp"
#include "sarsim/svg.hpp"

namespace {

using namespace sarsim;

std::vector<StrategyKind> parse_strategies(const std::string& flag) {
  if (flag == "all") {
    return {StrategyKind::Strategy1, StrategyKind::Strategy2, StrategyKind::Strategy3};
  }
  return {strategy_from_int(std::stoi(flag))};
}

void ensure_dir(const std::string& dir) {
  if (!dir.empty() && dir != ".") std::filesystem::create_directories(dir);
}

void ensure_parent_dir(const std::string& file_path) {
  ensure_dir(std::filesystem::path(file_path).parent_path().string());
}

int cmd_trial(const RunConfig& config, int n_r, int n_s, const std::string& strategy_flag,
              std::uint64_t seed, std::int64_t iterations_override, const std::string& out_path,
              int snapshots, const std::string& snapshot_dir) {
  const StrategyKind strategy = strategy_from_int(std::stoi(strategy_flag));
  TrialConfig tc;
  tc.iterations = iterations_override >= 0 ? iterations_override : config.iterations;
  tc.record_stride = config.record_stride;
  tc.rw_persistence = config.rw_persistence;
  tc.seeds = trial_seeds(seed, 0, n_r, n_s, strategy);

  std::function<void(const Simulator&)> observer;
  std::set<std::int64_t> frames;
  if (snapshots > 0) {
    if (snapshots == 1) {
      frames.insert(tc.iterations);
    } else {
      for (int i = 0; i < snapshots; ++i) {
        frames.insert(i * tc.iterations / (snapshots - 1));
      }
    }
    ensure_dir(snapshot_dir);
    observer = [&](const Simulator& sim) {
      if (frames.count(sim.world().iteration) == 0) return;
      const std::string path =
          snapshot_dir + "/snapshot_" + std::to_string(sim.world().iteration) + ".svg";
      write_text_file(path, world_snapshot(sim.world(), sim.last_readings(),
                                           sim.last_controls()));
      std::cout << "wrote " << path << "\n";
    };
  }

  const TrialRecord rec =
      run_trial(config.arena, config.sensors, n_r, n_s, strategy, tc, observer);

  ensure_parent_dir(out_path);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << "scenario,strategy,n_r,n_s,trial,iteration,retrieved\n";
  for (const auto& point : rec.series) {
    out << "0," << strategy_to_int(strategy) << ',' << n_r << ',' << n_s << ",0,"
        << point.iteration << ',' << point.retrieved << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + out_path);
  std::cout << "wrote " << out_path << "\n";

  const int threshold = config.tau_threshold > 0 ? config.tau_threshold
                                                 : default_tau_threshold(config.arena.n_t);
  const TimeConstant tau = time_constant(rec, threshold);
  std::cout << "retrieved " << rec.final_retrieved << "/" << config.arena.n_t << " in "
            << rec.iterations << " iterations; tau(" << threshold << ") = ";
  if (tau.censored) {
    std::cout << "censored at " << tau.iterations << " iterations\n";
  } else {
    std::cout << tau.iterations << " iterations (" << format_number(tau.seconds) << " s)\n";
  }
  return 0;
}

int cmd_sweep(const RunConfig& config, int scenario_flag, const std::string& strategy_flag,
              int trials_override, std::uint64_t seed, const std::string& out_dir) {
  const ScenarioKind scenario = scenario_from_int(scenario_flag);
  const auto strategies = parse_strategies(strategy_flag);
  SweepConfig sc = to_sweep_config(config, seed);
  if (trials_override > 0) sc.trials = trials_override;

  std::vector<SweepResult> results;
  results.reserve(strategies.size());
  for (const StrategyKind strategy : strategies) {
    results.push_back(run_sweep(sc, scenario, strategy));
  }

  ensure_dir(out_dir);
  const std::string series_path = out_dir + "/series.csv";
  const std::string summary_path = out_dir + "/summary.csv";
  const std::string manifest_path = out_dir + "/manifest.txt";
  write_series_csv(results, series_path);
  write_summary_csv(results, summary_path);
  write_manifest(sc, scenario, strategies, manifest_path);
  std::cout << "wrote " << series_path << "\n";
  std::cout << "wrote " << summary_path << "\n";
  std::cout << "wrote " << manifest_path << "\n";
  return 0;
}

int cmd_measure(int scenario_flag, const std::string& strategy_flag,
                const std::string& out_path) {
  const ScenarioKind scenario = scenario_from_int(scenario_flag);
  const auto strategies = parse_strategies(strategy_flag);
  ensure_parent_dir(out_path);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << "scenario,strategy,n_r,n_s,E,Q,H\n";
  for (const StrategyKind strategy : strategies) {
    for (const auto& [n_r, n_s] : scenario_combinations(scenario)) {
      const auto het = heterogeneity_measure({n_r, n_s, strategy});
      out << scenario_to_int(scenario) << ',' << strategy_to_int(strategy) << ',' << n_r
          << ',' << n_s << ',' << format_number(het.e) << ',' << format_number(het.q) << ','
          << format_number(het.h) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_report(const std::string& summary_path, const std::string& series_path,
               const std::string& out_dir) {
  const auto summary = read_summary_csv(summary_path);
  std::vector<SeriesRow> series;
  if (!series_path.empty()) series = read_series_csv(series_path);
  ensure_dir(out_dir);
  for (const auto& path : write_report_charts(summary, series, out_dir)) {
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search-and-rescue swarm simulator"};
  app.require_subcommand(1);
  // Let --config/--set appear after the subcommand name as well as before it.
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "key=value config file")->capture_default_str();
  app.add_option("--set", overrides, "config override key=value (repeatable)");

  auto* trial = app.add_subcommand("trial", "run one trial and write its series CSV");
  int nr = 25, ns = 25;
  std::string strategy_flag = "1";
  std::uint64_t seed = 1;
  std::int64_t iterations_override = -1;
  std::string trial_out = "trial_series.csv";
  int snapshots = 0;
  std::string snapshot_dir = ".";
  trial->add_option("--nr", nr, "rescuer count")->capture_default_str();
  trial->add_option("--ns", ns, "searcher count")->capture_default_str();
  trial->add_option("--strategy", strategy_flag, "rescuer strategy")
      ->check(CLI::IsMember({"1", "2", "3"}))
      ->capture_default_str();
  trial->add_option("--seed", seed, "base seed")->capture_default_str();
  trial->add_option("--iterations", iterations_override, "override iteration count");
  trial->add_option("--out", trial_out, "series CSV path")->capture_default_str();
  trial->add_option("--snapshots", snapshots, "emit K evenly spaced SVG frames");
  trial->add_option("--snapshot-dir", snapshot_dir, "snapshot directory")
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "run a scenario grid and write CSVs");
  int scenario_flag = 1;
  std::string sweep_strategy = "all";
  int trials_override = 0;
  std::uint64_t sweep_seed = 1;
  std::string out_dir = ".";
  sweep->add_option("--scenario", scenario_flag, "scenario 1, 2 or 3")
      ->check(CLI::IsMember({1, 2, 3}))
      ->required();
  sweep->add_option("--strategy", sweep_strategy, "strategy 1, 2, 3 or all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}))
      ->capture_default_str();
  sweep->add_option("--trials", trials_override, "trials per combination");
  sweep->add_option("--seed", sweep_seed, "base seed")->capture_default_str();
  sweep->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

  auto* measure = app.add_subcommand("measure", "write analytic heterogeneity CSV");
  int measure_scenario = 3;
  std::string measure_strategy = "all";
  std::string measure_out = "heterogeneity.csv";
  measure->add_option("--scenario", measure_scenario, "scenario 1, 2 or 3")
      ->check(CLI::IsMember({1, 2, 3}))
      ->capture_default_str();
  measure->add_option("--strategy", measure_strategy, "strategy 1, 2, 3 or all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}))
      ->capture_default_str();
  measure->add_option("--out", measure_out, "output CSV path")->capture_default_str();

  auto* report = app.add_subcommand("report", "render SVG charts from sweep CSVs");
  std::string summary_path;
  std::string series_path;
  std::string report_dir = ".";
  report->add_option("--summary", summary_path, "summary CSV path")->required();
  report->add_option("--series", series_path, "series CSV path (enables time-series chart)");
  report->add_option("--out-dir", report_dir, "output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*trial || *sweep) {
      const RunConfig config = sarsim::load_run_config(config_path, overrides);
      if (*trial) {
        return cmd_trial(config, nr, ns, strategy_flag, seed, iterations_override, trial_out,
                         snapshots, snapshot_dir);
      }
      return cmd_sweep(config, scenario_flag, sweep_strategy, trials_override, sweep_seed,
                       out_dir);
    }
    if (*measure) return cmd_measure(measure_scenario, measure_strategy, measure_out);
    if (*report) return cmd_report(summary_path, series_path, report_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
