#include "sarsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace sarsim {

int default_tau_threshold(int n_t) {
  if (n_t < 1) throw std::invalid_argument("threshold needs at least one target");
  return static_cast<int>(std::ceil(0.63 * static_cast<Scalar>(n_t)));
}

TimeConstant time_constant(const TrialRecord& record, int threshold) {
  if (threshold < 1) throw std::invalid_argument("threshold must be at least 1");
  TimeConstant tc;
  if (threshold < static_cast<int>(record.first_reach.size()) &&
      record.first_reach[threshold] >= 0) {
    tc.iterations = record.first_reach[threshold];
    tc.censored = false;
  } else {
    tc.iterations = record.iterations;
    tc.censored = true;
  }
  tc.seconds = static_cast<Scalar>(tc.iterations) * record.dt;
  return tc;
}

TauStats aggregate_tau(const std::vector<TimeConstant>& taus) {
  if (taus.empty()) throw std::invalid_argument("aggregate_tau needs at least one trial");
  TauStats s;
  s.count = static_cast<int>(taus.size());
  Scalar sum_i = 0.0, sum_s = 0.0;
  for (const auto& t : taus) {
    sum_i += static_cast<Scalar>(t.iterations);
    sum_s += t.seconds;
    s.censored_count += t.censored ? 1 : 0;
  }
  s.mean_iterations = sum_i / s.count;
  s.mean_seconds = sum_s / s.count;
  Scalar var_i = 0.0, var_s = 0.0;
  for (const auto& t : taus) {
    const Scalar di = static_cast<Scalar>(t.iterations) - s.mean_iterations;
    const Scalar ds = t.seconds - s.mean_seconds;
    var_i += di * di;
    var_s += ds * ds;
  }
  s.std_iterations = std::sqrt(var_i / s.count);
  s.std_seconds = std::sqrt(var_s / s.count);
  return s;
}

Scalar efficiency(Scalar tau_mean_seconds, const CostModel& cost, int n_r, int n_s) {
  if (!(tau_mean_seconds > 0.0)) throw std::invalid_argument("efficiency requires tau > 0");
  if (!(cost.c_r > 0.0) || !(cost.c_s > 0.0)) {
    throw std::invalid_argument("cost components must be positive");
  }
  if (n_r < 0 || n_s < 0 || n_r + n_s < 1) {
    throw std::invalid_argument("efficiency requires at least one agent");
  }
  return 1.0 / (tau_mean_seconds * (cost.ratio() * n_r + n_s));
}

std::pair<CostModel, CostModel> default_cost_models(StrategyKind strategy) {
  switch (strategy) {
    case StrategyKind::Strategy1:
      return {CostModel{5.0, 1.0}, CostModel{7.0, 5.0}};
    case StrategyKind::Strategy2:
      return {CostModel{3.0, 1.0}, CostModel{6.5, 5.0}};
    case StrategyKind::Strategy3:
      return {CostModel{1.0, 1.0}, CostModel{6.5, 5.0}};
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace sarsim
