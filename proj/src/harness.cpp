#include "sarsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sarsim/rng.hpp"

namespace sarsim {

ScenarioKind scenario_from_int(int tag) {
  if (tag < 1 || tag > 3) {
    throw ConfigError("scenario must be 1, 2 or 3 (got " + std::to_string(tag) + ")");
  }
  return static_cast<ScenarioKind>(tag);
}

std::vector<std::pair<int, int>> scenario_combinations(ScenarioKind kind) {
  std::vector<std::pair<int, int>> combos;
  switch (kind) {
    case ScenarioKind::Scenario1:
      for (int n_r = 5; n_r <= 50; n_r += 5) combos.emplace_back(n_r, 0);
      break;
    case ScenarioKind::Scenario2:
      for (int n_s = 0; n_s <= 50; n_s += 5) combos.emplace_back(25, n_s);
      break;
    case ScenarioKind::Scenario3:
      for (int n_s = 0; n_s <= 45; n_s += 5) combos.emplace_back(50 - n_s, n_s);
      break;
  }
  return combos;
}

Seeds trial_seeds(std::uint64_t base_seed, int trial, int n_r, int n_s, StrategyKind strategy) {
  const auto t = static_cast<std::uint64_t>(trial);
  const auto r = static_cast<std::uint64_t>(n_r);
  const auto s = static_cast<std::uint64_t>(n_s);
  const auto k = static_cast<std::uint64_t>(strategy_to_int(strategy));
  Seeds seeds;
  seeds.layout_seed = seed_mix({base_seed, t});
  seeds.agent_seed = seed_mix({base_seed, t, r, s, k, 1});
  seeds.walk_seed = seed_mix({base_seed, t, r, s, k, 2});
  return seeds;
}

SweepResult run_sweep(const SweepConfig& config, ScenarioKind scenario, StrategyKind strategy) {
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  config.arena.validate();
  config.sensors.validate();

  const auto combos = scenario_combinations(scenario);
  struct Job {
    int combo_index;
    int trial;
    int n_r;
    int n_s;
  };
  std::vector<Job> jobs;
  jobs.reserve(combos.size() * config.trials);
  for (int ci = 0; ci < static_cast<int>(combos.size()); ++ci) {
    for (int trial = 0; trial < config.trials; ++trial) {
      jobs.push_back({ci, trial, combos[ci].first, combos[ci].second});
    }
  }

  std::vector<TrialRecord> records(jobs.size());
  std::atomic<std::size_t> next_job{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t j = next_job.fetch_add(1);
      if (j >= jobs.size() || failed.load()) return;
      const Job& job = jobs[j];
      TrialConfig tc;
      tc.iterations = config.iterations;
      tc.record_stride = config.record_stride;
      tc.rw_persistence = config.rw_persistence;
      tc.seeds = trial_seeds(config.base_seed, job.trial, job.n_r, job.n_s, strategy);
      try {
        records[j] = run_trial(config.arena, config.sensors, job.n_r, job.n_s, strategy, tc);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed.store(true);
        if (failure.empty()) failure = e.what();
        return;
      }
    }
  };

  int n_threads = config.threads > 0
                      ? config.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  if (n_threads < 1) n_threads = 1;
  n_threads = static_cast<int>(std::min<std::size_t>(n_threads, jobs.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw ConfigError("sweep trial failed: " + failure);

  const int threshold = config.tau_threshold > 0 ? config.tau_threshold
                                                 : default_tau_threshold(config.arena.n_t);
  const auto& cost_pair = config.costs[strategy_to_int(strategy) - 1];

  SweepResult result;
  result.scenario = scenario;
  result.strategy = strategy;
  result.combos.resize(combos.size());
  for (int ci = 0; ci < static_cast<int>(combos.size()); ++ci) {
    ComboResult& combo = result.combos[ci];
    combo.scenario = scenario;
    combo.strategy = strategy;
    combo.n_r = combos[ci].first;
    combo.n_s = combos[ci].second;
    combo.records.reserve(config.trials);
    for (int trial = 0; trial < config.trials; ++trial) {
      combo.records.push_back(std::move(records[static_cast<std::size_t>(ci) * config.trials +
                                                trial]));
      combo.taus.push_back(time_constant(combo.records.back(), threshold));
    }
    combo.stats = aggregate_tau(combo.taus);
    combo.het = heterogeneity_measure({combo.n_r, combo.n_s, strategy});
    combo.efficiency_a = efficiency(combo.stats.mean_seconds, cost_pair.first, combo.n_r,
                                    combo.n_s);
    combo.efficiency_b = efficiency(combo.stats.mean_seconds, cost_pair.second, combo.n_r,
                                    combo.n_s);
  }
  return result;
}

std::string format_number(Scalar v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  return out;
}

}  // namespace

void write_series_csv(const std::vector<SweepResult>& results, const std::string& path) {
  auto out = open_for_write(path);
  out << "scenario,strategy,n_r,n_s,trial,iteration,retrieved\n";
  for (const auto& result : results) {
    for (const auto& combo : result.combos) {
      for (int trial = 0; trial < static_cast<int>(combo.records.size()); ++trial) {
        const auto& rec = combo.records[trial];
        for (const auto& point : rec.series) {
          out << scenario_to_int(combo.scenario) << ',' << strategy_to_int(combo.strategy)
              << ',' << combo.n_r << ',' << combo.n_s << ',' << trial << ','
              << point.iteration << ',' << point.retrieved << '\n';
        }
      }
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_summary_csv(const std::vector<SweepResult>& results, const std::string& path) {
  auto out = open_for_write(path);
  out << "scenario,strategy,n_r,n_s,trials,censored,tau_mean_iter,tau_std_iter,tau_mean_s,"
         "E,Q,H,efficiency_cost_a,efficiency_cost_b\n";
  for (const auto& result : results) {
    for (const auto& combo : result.combos) {
      out << scenario_to_int(combo.scenario) << ',' << strategy_to_int(combo.strategy) << ','
          << combo.n_r << ',' << combo.n_s << ',' << combo.stats.count << ','
          << combo.stats.censored_count << ',' << format_number(combo.stats.mean_iterations)
          << ',' << format_number(combo.stats.std_iterations) << ','
          << format_number(combo.stats.mean_seconds) << ',' << format_number(combo.het.e)
          << ',' << format_number(combo.het.q) << ',' << format_number(combo.het.h) << ','
          << format_number(combo.efficiency_a) << ',' << format_number(combo.efficiency_b)
          << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_manifest(const SweepConfig& config, ScenarioKind scenario,
                    const std::vector<StrategyKind>& strategies, const std::string& path) {
  auto out = open_for_write(path);
  out << "scenario=" << scenario_to_int(scenario) << '\n';
  out << "strategies=";
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    out << (i ? "," : "") << strategy_to_int(strategies[i]);
  }
  out << '\n';
  out << "arena_x=" << format_number(config.arena.x) << '\n';
  out << "arena_y=" << format_number(config.arena.y) << '\n';
  out << "n_t=" << config.arena.n_t << '\n';
  out << "collection_centers=";
  for (std::size_t i = 0; i < config.arena.collection_points.size(); ++i) {
    const auto& sq = config.arena.collection_points[i];
    out << (i ? ";" : "") << format_number(sq.center.x()) << ':'
        << format_number(sq.center.y());
  }
  out << '\n';
  out << "collection_half_side="
      << format_number(config.arena.collection_points.empty()
                           ? 0.0
                           : config.arena.collection_points.front().half_side)
      << '\n';
  const auto& z = config.arena.rescuer_init_zone;
  out << "rescuer_zone=" << format_number(z.x_min) << ':' << format_number(z.x_max) << ':'
      << format_number(z.y_min) << ':' << format_number(z.y_max) << '\n';
  out << "d_cl=" << format_number(config.sensors.d_cl) << '\n';
  out << "d_ts=" << format_number(config.sensors.d_ts) << '\n';
  out << "d_tl=" << format_number(config.sensors.d_tl) << '\n';
  out << "d_c=" << format_number(config.sensors.d_c) << '\n';
  out << "max_speed=" << format_number(config.sensors.max_speed) << '\n';
  out << "dt=" << format_number(config.sensors.dt) << '\n';
  out << "iterations=" << config.iterations << '\n';
  out << "record_stride=" << config.record_stride << '\n';
  out << "rw_persistence=" << config.rw_persistence << '\n';
  out << "trials=" << config.trials << '\n';
  out << "base_seed=" << config.base_seed << '\n';
  out << "tau_threshold="
      << (config.tau_threshold > 0 ? config.tau_threshold
                                   : default_tau_threshold(config.arena.n_t))
      << '\n';
  for (int s = 1; s <= 3; ++s) {
    const auto& pair = config.costs[s - 1];
    out << "cost_s" << s << "_a=" << format_number(pair.first.c_r) << ':'
        << format_number(pair.first.c_s) << '\n';
    out << "cost_s" << s << "_b=" << format_number(pair.second.c_r) << ':'
        << format_number(pair.second.c_s) << '\n';
  }
  for (int trial = 0; trial < config.trials; ++trial) {
    out << "layout_seed_" << trial << '='
        << seed_mix({config.base_seed, static_cast<std::uint64_t>(trial)}) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sarsim
