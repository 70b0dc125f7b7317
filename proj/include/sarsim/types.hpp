#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sarsim {

using Scalar = double;
using Vec2 = Eigen::Vector2d;

/// Thrown when an arena, sensor, or run configuration violates its invariants.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AgentKind { Searcher, Rescuer };

enum class StrategyKind : int { Strategy1 = 1, Strategy2 = 2, Strategy3 = 3 };

StrategyKind strategy_from_int(int tag);
inline int strategy_to_int(StrategyKind s) { return static_cast<int>(s); }

struct CollectionSquare {
  Vec2 center = Vec2::Zero();
  Scalar half_side = 0.0;
};

struct Rect {
  Scalar x_min = 0.0;
  Scalar x_max = 0.0;
  Scalar y_min = 0.0;
  Scalar y_max = 0.0;

  Scalar width() const { return x_max - x_min; }
  Scalar height() const { return y_max - y_min; }
  bool contains(const Vec2& p) const {
    return p.x() >= x_min && p.x() <= x_max && p.y() >= y_min && p.y() <= y_max;
  }
};

/// Rectangular configuration space with its static entities.
struct ArenaConfig {
  Scalar x = 100.0;
  Scalar y = 100.0;
  std::vector<CollectionSquare> collection_points = default_collection_points();
  Rect rescuer_init_zone{85.0, 100.0, 85.0, 100.0};
  int n_t = 250;

  int n_c() const { return static_cast<int>(collection_points.size()); }
  void validate() const;

  static std::vector<CollectionSquare> default_collection_points();
};

/// Detection ranges, kinematics, and the tick length. Ranges must satisfy
/// d_cl < d_ts < d_tl < d_c.
struct SensorConfig {
  Scalar d_cl = 1.5;
  Scalar d_ts = 3.0;
  Scalar d_tl = 10.0;
  Scalar d_c = 35.0;
  Scalar max_speed = 15.0;
  Scalar dt = 0.02;

  void validate() const;
};

struct AgentState {
  int id = 0;
  AgentKind kind = AgentKind::Searcher;
  Vec2 position = Vec2::Zero();
  std::optional<int> carrying;  // target id while held; rescuers only
  Vec2 rw_heading = Vec2::Zero();
  int rw_ticks_left = 0;
};

struct GroundTarget {
  int id = 0;
  Vec2 position = Vec2::Zero();
  bool alive = true;
};

/// Full mutable simulation state. Invariant after every tick:
/// alive ground targets + carried targets + retrieved == n_t.
struct World {
  ArenaConfig arena;
  SensorConfig sensors;
  StrategyKind strategy = StrategyKind::Strategy1;
  std::vector<AgentState> agents;
  std::vector<GroundTarget> targets;
  int retrieved = 0;
  std::int64_t iteration = 0;

  int carried_count() const;
  int alive_target_count() const;
  int searchers_count() const;
  int rescuers_count() const;
};

}  // namespace sarsim
