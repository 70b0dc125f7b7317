#pragma once

#include <optional>
#include <vector>

#include "sarsim/types.hpp"

namespace test_helpers {

using namespace sarsim;

/// Sensor values used by most worked examples in this suite. The shipped
/// defaults tune for the full-grid experiments; the examples are easier to
/// check by hand with round numbers.
inline SensorConfig reference_sensors() {
  SensorConfig s;
  s.d_cl = 1.5;
  s.d_ts = 3.0;
  s.d_tl = 10.0;
  s.d_c = 25.0;
  s.max_speed = 10.0;
  s.dt = 0.02;
  return s;
}

inline World empty_world(StrategyKind strategy = StrategyKind::Strategy1,
                         const SensorConfig& sensors = reference_sensors()) {
  World w;
  w.sensors = sensors;
  w.strategy = strategy;
  return w;
}

inline AgentState make_agent(int id, AgentKind kind, const Vec2& pos,
                             std::optional<int> carrying = std::nullopt) {
  AgentState a;
  a.id = id;
  a.kind = kind;
  a.position = pos;
  a.carrying = carrying;
  return a;
}

inline GroundTarget make_target(int id, const Vec2& pos, bool alive = true) {
  GroundTarget t;
  t.id = id;
  t.position = pos;
  t.alive = alive;
  return t;
}

inline bool vec_eq(const Vec2& a, const Vec2& b) {
  return a.x() == b.x() && a.y() == b.y();
}

inline bool vec_near(const Vec2& a, const Vec2& b, Scalar tol = 1e-12) {
  return (a - b).norm() <= tol;
}

}  // namespace test_helpers
