#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sarsim/heterogeneity.hpp"
#include "sarsim/metrics.hpp"
#include "sarsim/simulation.hpp"
#include "sarsim/types.hpp"

namespace sarsim {

/// The three population grids:
///   Scenario1 — rescuers only, n_r = 5,10,...,50
///   Scenario2 — 25 rescuers, n_s = 0,5,...,50
///   Scenario3 — fixed team of 50, n_s = 0,5,...,45
enum class ScenarioKind : int { Scenario1 = 1, Scenario2 = 2, Scenario3 = 3 };

ScenarioKind scenario_from_int(int tag);
inline int scenario_to_int(ScenarioKind k) { return static_cast<int>(k); }

/// The (n_r, n_s) points of a scenario in ascending sweep order.
std::vector<std::pair<int, int>> scenario_combinations(ScenarioKind kind);

/// Seed schedule for one trial. The layout seed depends only on
/// (base_seed, trial) so every combination and strategy shares the same ten
/// target layouts; agent and walk seeds also mix in the composition so
/// placements differ across combinations.
Seeds trial_seeds(std::uint64_t base_seed, int trial, int n_r, int n_s, StrategyKind strategy);

struct SweepConfig {
  ArenaConfig arena{};
  SensorConfig sensors{};
  std::int64_t iterations = 15000;
  int record_stride = 10;
  int rw_persistence = 50;
  int trials = 10;
  std::uint64_t base_seed = 1;
  int threads = 0;        // 0 = hardware concurrency
  int tau_threshold = 0;  // 0 = ceil(0.63 * n_t)
  std::array<std::pair<CostModel, CostModel>, 3> costs = {
      default_cost_models(StrategyKind::Strategy1),
      default_cost_models(StrategyKind::Strategy2),
      default_cost_models(StrategyKind::Strategy3),
  };
};

struct ComboResult {
  ScenarioKind scenario = ScenarioKind::Scenario1;
  StrategyKind strategy = StrategyKind::Strategy1;
  int n_r = 0;
  int n_s = 0;
  std::vector<TrialRecord> records;
  std::vector<TimeConstant> taus;
  TauStats stats;
  HeterogeneityResult het;
  Scalar efficiency_a = 0.0;
  Scalar efficiency_b = 0.0;
};

struct SweepResult {
  ScenarioKind scenario = ScenarioKind::Scenario1;
  StrategyKind strategy = StrategyKind::Strategy1;
  std::vector<ComboResult> combos;
};

/// Runs every (combination, trial) of a scenario under one strategy,
/// parallel across trials, and aggregates per combination. Deterministic:
/// results are identical for equal configs regardless of thread count.
SweepResult run_sweep(const SweepConfig& config, ScenarioKind scenario, StrategyKind strategy);

/// CSV emission. Headers are fixed; numbers carry nine significant digits.
/// series: scenario,strategy,n_r,n_s,trial,iteration,retrieved
/// summary: scenario,strategy,n_r,n_s,trials,censored,tau_mean_iter,
///          tau_std_iter,tau_mean_s,E,Q,H,efficiency_cost_a,efficiency_cost_b
void write_series_csv(const std::vector<SweepResult>& results, const std::string& path);
void write_summary_csv(const std::vector<SweepResult>& results, const std::string& path);

/// Key=value dump of every config field plus the per-trial layout seeds.
void write_manifest(const SweepConfig& config, ScenarioKind scenario,
                    const std::vector<StrategyKind>& strategies, const std::string& path);

/// Shared numeric formatting for all CSV output (%.9g).
std::string format_number(Scalar v);

}  // namespace sarsim
