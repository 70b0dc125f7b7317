#include "sarsim/behavior.hpp"

#include "sarsim/world.hpp"

namespace sarsim {

std::vector<int> acceptable_hosts(StrategyKind strategy, AgentKind kind, const World& world,
                                  int self_index) {
  std::vector<int> hosts;
  hosts.reserve(world.agents.size());
  for (int j = 0; j < static_cast<int>(world.agents.size()); ++j) {
    if (j == self_index) continue;
    if (!host_allowed(strategy, kind, world.agents[j].kind)) continue;
    hosts.push_back(j);
  }
  return hosts;
}

Vec2 random_walk_vector(AgentState& agent, const SensorReading& reading, std::mt19937_64& rng,
                        int rw_persistence) {
  if (reading.p_cl == 1 || reading.p_ts == 1 || reading.p_tl == 1 || reading.p_c == 1 ||
      agent.carrying.has_value()) {
    return Vec2::Zero();
  }
  if (agent.rw_ticks_left <= 0) {
    std::uniform_real_distribution<Scalar> u(-1000.0, 1000.0);
    Vec2 h = Vec2::Zero();
    do {
      h = Vec2(u(rng), u(rng));
    } while (h.x() == 0.0 && h.y() == 0.0);
    agent.rw_heading = h;
    agent.rw_ticks_left = rw_persistence > 0 ? rw_persistence : 1;
  }
  agent.rw_ticks_left -= 1;
  return agent.rw_heading;
}

Vec2 retrieval_vector(const World& world, const AgentState& agent) {
  if (agent.kind != AgentKind::Rescuer || !agent.carrying.has_value()) return Vec2::Zero();
  auto [center, dist] = nearest_collection_point(world, agent.position);
  (void)dist;
  return center - agent.position;
}

ControlOutput control_vector(const SensorReading& reading, const Vec2& v_r, const Vec2& v_p,
                             AgentKind kind, bool carrying, Scalar max_speed) {
  ControlOutput out;
  const Vec2 v_con =
      (reading.v_t + reading.v_c + v_p + v_r) * (1.0 - static_cast<Scalar>(reading.p_cl)) -
      reading.v_cl;
  const Scalar norm = v_con.norm();
  out.velocity = norm > 0.0 ? Vec2(v_con / norm * max_speed) : Vec2::Zero();

  if (carrying) {
    out.new_state = AgentMode::Retrieval;
  } else if (reading.p_ts == 1 && kind == AgentKind::Searcher) {
    out.new_state = AgentMode::StoppedAtTarget;
  } else if (reading.p_c == 1) {
    out.new_state = AgentMode::BeaconApproach;
  } else if (reading.p_tl == 1) {
    out.new_state = AgentMode::LongRangeApproach;
  } else {
    out.new_state = AgentMode::RandomWalk;
  }
  return out;
}

ControlOutput control_from_reading(const World& world, AgentState& agent,
                                   const SensorReading& reading, std::mt19937_64& rng,
                                   int rw_persistence) {
  const Vec2 v_r = random_walk_vector(agent, reading, rng, rw_persistence);
  const Vec2 v_p = retrieval_vector(world, agent);
  return control_vector(reading, v_r, v_p, agent.kind, agent.carrying.has_value(),
                        world.sensors.max_speed);
}

ControlOutput agent_control(World& world, int agent_index, std::mt19937_64& rng,
                            int rw_persistence) {
  const SensorReading reading = sense_agent(world, agent_index);
  return control_from_reading(world, world.agents[agent_index], reading, rng, rw_persistence);
}

}  // namespace sarsim
