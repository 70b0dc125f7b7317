#pragma once

#include <istream>
#include <string>
#include <vector>

#include "sarsim/harness.hpp"
#include "sarsim/types.hpp"

namespace sarsim {

/// Every tunable of a run, loadable from a flat key=value file with '#'
/// comments and overridable from the command line. Unknown keys are
/// rejected. Keys:
///   arena_x, arena_y, n_t, collection_centers (x:y;x:y;...),
///   collection_half_side, rescuer_zone (xmin:xmax:ymin:ymax),
///   d_cl, d_ts, d_tl, d_c, max_speed, dt,
///   iterations, record_stride, rw_persistence, trials, threads,
///   tau_threshold, cost_s1_a..cost_s3_b (c_r:c_s)
struct RunConfig {
  ArenaConfig arena{};
  SensorConfig sensors{};
  std::int64_t iterations = 15000;
  int record_stride = 10;
  int rw_persistence = 50;
  int trials = 10;
  int threads = 0;
  int tau_threshold = 0;
  std::array<std::pair<CostModel, CostModel>, 3> costs = {
      default_cost_models(StrategyKind::Strategy1),
      default_cost_models(StrategyKind::Strategy2),
      default_cost_models(StrategyKind::Strategy3),
  };

  void validate() const;
};

/// Applies one "key=value" assignment. Unknown key or malformed value throws
/// ConfigError mentioning the key (and line number when given).
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value,
                        int line_no = 0);

/// Defaults, then the file (when non-empty path), then the overrides, then
/// validation.
RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides);
RunConfig parse_run_config(std::istream& in, const std::vector<std::string>& overrides);

/// RunConfig plus a base seed, as the sweep harness consumes it.
SweepConfig to_sweep_config(const RunConfig& config, std::uint64_t base_seed);

}  // namespace sarsim
