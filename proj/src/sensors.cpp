#include "sarsim/sensors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "sarsim/behavior.hpp"
#include "sarsim/rng.hpp"

namespace sarsim {

namespace {

constexpr Scalar kCoincidenceEps = 1e-12;
constexpr Scalar kTwoPi = 6.283185307179586476925286766559;

}  // namespace

Vec2 coincident_pair_direction(int id_low, int id_high) {
  const auto diff = static_cast<std::uint64_t>(id_high - id_low);
  const Scalar angle = kTwoPi * (static_cast<Scalar>(splitmix64(diff) >> 11) * 0x1.0p-53);
  return Vec2(std::cos(angle), std::sin(angle));
}

std::pair<int, Vec2> collision_sense(const World& world, int agent_i) {
  const AgentState& self = world.agents[agent_i];
  const Scalar range = world.sensors.d_cl;
  const Scalar range2 = range * range;
  int p_cl = 0;
  Vec2 v_cl = Vec2::Zero();

  for (int j = 0; j < static_cast<int>(world.agents.size()); ++j) {
    if (j == agent_i) continue;
    const AgentState& other = world.agents[j];
    const Vec2 d = other.position - self.position;
    const Scalar d2 = d.squaredNorm();
    if (d2 > range2) continue;
    p_cl = 1;
    if (d2 < kCoincidenceEps * kCoincidenceEps) {
      const bool self_is_low = self.id < other.id;
      const Vec2 dir = self_is_low ? coincident_pair_direction(self.id, other.id)
                                   : -coincident_pair_direction(other.id, self.id);
      v_cl += dir * (range / 2.0);
    } else {
      v_cl += d;
    }
  }

  const Scalar x = self.position.x();
  const Scalar y = self.position.y();
  if (x <= range) {
    p_cl = 1;
    v_cl += Vec2(-x, 0.0);
  }
  if (world.arena.x - x <= range) {
    p_cl = 1;
    v_cl += Vec2(world.arena.x - x, 0.0);
  }
  if (y <= range) {
    p_cl = 1;
    v_cl += Vec2(0.0, -y);
  }
  if (world.arena.y - y <= range) {
    p_cl = 1;
    v_cl += Vec2(0.0, world.arena.y - y);
  }

  if (p_cl == 0) v_cl = Vec2::Zero();
  return {p_cl, v_cl};
}

std::pair<int, std::optional<int>> short_range_sense(const World& world, int agent_i) {
  const Vec2& pos = world.agents[agent_i].position;
  const Scalar range2 = world.sensors.d_ts * world.sensors.d_ts;
  Scalar best_d2 = std::numeric_limits<Scalar>::infinity();
  int best_id = -1;
  for (const auto& t : world.targets) {
    if (!t.alive) continue;
    const Scalar d2 = (t.position - pos).squaredNorm();
    if (d2 > range2) continue;
    if (d2 < best_d2 || (d2 == best_d2 && t.id < best_id)) {
      best_d2 = d2;
      best_id = t.id;
    }
  }
  if (best_id < 0) return {0, std::nullopt};
  return {1, best_id};
}

std::pair<int, Vec2> long_range_sense(const World& world, int agent_i, bool enabled) {
  if (!enabled) return {0, Vec2::Zero()};
  if (short_range_sense(world, agent_i).first == 1) return {0, Vec2::Zero()};
  const Vec2& pos = world.agents[agent_i].position;
  const Scalar range2 = world.sensors.d_tl * world.sensors.d_tl;
  Scalar best_d2 = std::numeric_limits<Scalar>::infinity();
  int best_id = -1;
  Vec2 best_v = Vec2::Zero();
  for (const auto& t : world.targets) {
    if (!t.alive) continue;
    const Vec2 d = t.position - pos;
    const Scalar d2 = d.squaredNorm();
    if (d2 > range2) continue;
    if (d2 < best_d2 || (d2 == best_d2 && t.id < best_id)) {
      best_d2 = d2;
      best_id = t.id;
      best_v = d;
    }
  }
  if (best_id < 0) return {0, Vec2::Zero()};
  return {1, best_v};
}

bool long_range_enabled(AgentKind kind, StrategyKind strategy, bool carrying) {
  if (kind == AgentKind::Searcher) return true;
  return strategy != StrategyKind::Strategy3 && !carrying;
}

bool is_transmitting(const World& world, int agent_j) {
  const AgentState& a = world.agents[agent_j];
  if (a.carrying.has_value()) return false;
  const int p_ts = short_range_sense(world, agent_j).first;
  if (a.kind == AgentKind::Searcher && p_ts == 1) return true;
  const bool enabled = long_range_enabled(a.kind, world.strategy, false);
  return long_range_sense(world, agent_j, enabled).first == 1;
}

bool host_allowed(StrategyKind strategy, AgentKind receiver_kind, AgentKind host_kind) {
  if (receiver_kind == AgentKind::Searcher) return true;
  if (strategy == StrategyKind::Strategy1) return true;
  return host_kind == AgentKind::Searcher;
}

std::pair<int, Vec2> comm_sense(const World& world, int agent_i, const std::vector<int>& hosts) {
  const AgentState& self = world.agents[agent_i];
  if (self.carrying.has_value()) return {0, Vec2::Zero()};
  if (short_range_sense(world, agent_i).first == 1) return {0, Vec2::Zero()};
  const bool enabled = long_range_enabled(self.kind, world.strategy, false);
  if (long_range_sense(world, agent_i, enabled).first == 1) return {0, Vec2::Zero()};

  const Scalar range2 = world.sensors.d_c * world.sensors.d_c;
  Scalar best_d2 = std::numeric_limits<Scalar>::infinity();
  int best_id = -1;
  Vec2 best_v = Vec2::Zero();
  for (int j : hosts) {
    if (j == agent_i) continue;
    if (!is_transmitting(world, j)) continue;
    const Vec2 d = world.agents[j].position - self.position;
    const Scalar d2 = d.squaredNorm();
    if (d2 > range2) continue;
    if (d2 < best_d2 || (d2 == best_d2 && world.agents[j].id < best_id)) {
      best_d2 = d2;
      best_id = world.agents[j].id;
      best_v = d;
    }
  }
  if (best_id < 0) return {0, Vec2::Zero()};
  return {1, best_v};
}

SensorReading sense_agent(const World& world, int agent_i) {
  const AgentState& self = world.agents[agent_i];
  SensorReading r;
  std::tie(r.p_cl, r.v_cl) = collision_sense(world, agent_i);
  std::tie(r.p_ts, r.nearest_short_target) = short_range_sense(world, agent_i);
  const bool enabled = long_range_enabled(self.kind, world.strategy, self.carrying.has_value());
  std::tie(r.p_tl, r.v_t) = long_range_sense(world, agent_i, enabled);
  const auto hosts = acceptable_hosts(world.strategy, self.kind, world, agent_i);
  std::tie(r.p_c, r.v_c) = comm_sense(world, agent_i, hosts);
  return r;
}

}  // namespace sarsim
