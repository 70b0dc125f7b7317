#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sarsim/simulation.hpp"
#include "sarsim/types.hpp"

namespace sarsim {

/// First time the retrieved count reached a threshold. Censored marks a
/// trial that never got there; its iterations are the full trial length.
struct TimeConstant {
  std::int64_t iterations = 0;
  Scalar seconds = 0.0;
  bool censored = false;
};

/// Default threshold: 63% of the target count, rounded up (158 of 250).
int default_tau_threshold(int n_t);

/// Exact time constant from the record's full-resolution first-reach curve.
TimeConstant time_constant(const TrialRecord& record, int threshold);

struct TauStats {
  Scalar mean_iterations = 0.0;
  Scalar std_iterations = 0.0;
  Scalar mean_seconds = 0.0;
  Scalar std_seconds = 0.0;
  int censored_count = 0;
  int count = 0;
};

/// Mean and population standard deviation across trials; censored trials
/// contribute at full trial length and are counted separately.
TauStats aggregate_tau(const std::vector<TimeConstant>& taus);

/// Per-agent deployment costs; c = c_r / c_s is the rescuer premium.
struct CostModel {
  Scalar c_r = 1.0;
  Scalar c_s = 1.0;

  Scalar ratio() const { return c_r / c_s; }
};

/// 1 / (tau * (c * n_r + n_s)) with tau in seconds.
Scalar efficiency(Scalar tau_mean_seconds, const CostModel& cost, int n_r, int n_s);

/// The two cost settings reported per strategy: {5:1, 7:5} for Strategy1,
/// {3:1, 6.5:5} for Strategy2, {1:1, 6.5:5} for Strategy3.
std::pair<CostModel, CostModel> default_cost_models(StrategyKind strategy);

}  // namespace sarsim
