#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "sarsim/behavior.hpp"
#include "sarsim/sensors.hpp"
#include "sarsim/types.hpp"

namespace sarsim {

/// The three independent RNG streams of one trial: target layout, agent
/// placement, and the per-agent random-walk streams derived from walk_seed.
struct Seeds {
  std::uint64_t layout_seed = 0;
  std::uint64_t agent_seed = 0;
  std::uint64_t walk_seed = 0;
};

struct TrialConfig {
  std::int64_t iterations = 15000;  // 300 s at dt = 0.02
  int record_stride = 10;
  int rw_persistence = 50;
  Seeds seeds{};
};

struct SeriesPoint {
  std::int64_t iteration = 0;
  int retrieved = 0;
};

/// Everything observable about one finished trial. `series` is the strided
/// retrieved-count curve (iteration 0, every record_stride ticks, and the
/// final tick); `first_reach[k]` is the exact first iteration at which the
/// retrieved count reached k, or -1 if it never did.
struct TrialRecord {
  std::vector<SeriesPoint> series;
  std::vector<std::int64_t> first_reach;
  std::int64_t pickups = 0;
  int final_retrieved = 0;
  std::int64_t iterations = 0;
  int record_stride = 10;
  int n_r = 0;
  int n_s = 0;
  StrategyKind strategy = StrategyKind::Strategy1;
  Seeds seeds{};
  Scalar dt = 0.02;
  int n_t = 0;
};

/// Advances a World tick by tick. Each tick is synchronous: all sensor
/// readings are taken against the pre-tick snapshot, then all controls are
/// computed, then everyone moves (clamped to the arena), then pickups
/// resolve in ascending agent order (lowest id wins a contested target;
/// losers stay empty for the tick), then carrying agents inside a
/// collection square deliver. Sensing runs on a uniform grid over the
/// static targets but is bit-identical to the reference sensor functions.
class Simulator {
 public:
  Simulator(World world, const TrialConfig& config);

  void step();

  const World& world() const { return world_; }
  const std::vector<SensorReading>& last_readings() const { return readings_; }
  const std::vector<ControlOutput>& last_controls() const { return controls_; }
  const std::vector<std::int64_t>& first_reach() const { return first_reach_; }
  std::int64_t pickups() const { return pickups_; }

 private:
  void grid_index_of(const Vec2& p, int& cx, int& cy) const;
  void remove_target_from_grid(int target_id);
  void sense_all();

  World world_;
  TrialConfig config_;
  std::vector<std::mt19937_64> walk_rngs_;
  std::vector<SensorReading> readings_;
  std::vector<ControlOutput> controls_;
  std::vector<char> transmitting_;
  std::vector<std::int64_t> first_reach_;
  std::int64_t pickups_ = 0;

  Scalar cell_size_ = 1.0;
  int grid_nx_ = 1;
  int grid_ny_ = 1;
  std::vector<std::vector<int>> grid_;  // target ids per cell; targets never move
};

/// Builds a world from the trial seeds and runs it to completion, recording
/// the strided series and exact first-reach curve. Deterministic: equal
/// inputs give equal records. `observer`, when set, is called once after
/// construction and after every tick (and disables the fast-forward that
/// otherwise skips ticks after every target has been retrieved).
TrialRecord run_trial(const ArenaConfig& arena, const SensorConfig& sensors, int n_r, int n_s,
                      StrategyKind strategy, const TrialConfig& config,
                      const std::function<void(const Simulator&)>& observer = {});

}  // namespace sarsim
