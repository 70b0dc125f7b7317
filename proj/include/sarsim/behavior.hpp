#pragma once

#include <random>
#include <vector>

#include "sarsim/sensors.hpp"
#include "sarsim/types.hpp"

namespace sarsim {

/// Per-tick agent activity, reported alongside the velocity command.
enum class AgentMode : int {
  RandomWalk = 0,
  LongRangeApproach = 1,
  BeaconApproach = 2,
  StoppedAtTarget = 3,  // searchers only: parked beside a short-range target
  Retrieval = 4,        // rescuers only: carrying toward a collection point
};

struct ControlOutput {
  Vec2 velocity = Vec2::Zero();
  AgentMode new_state = AgentMode::RandomWalk;
};

/// The agent indices this agent listens to over the communicator. Searchers
/// listen to everyone; rescuers listen to everyone under Strategy1 and to
/// searchers only under Strategy2/Strategy3. Never contains the focal agent.
std::vector<int> acceptable_hosts(StrategyKind strategy, AgentKind kind, const World& world,
                                  int self_index);

/// Random-walk drive. Zero whenever any sensor bit is set or the agent is
/// carrying; otherwise the persistent heading, resampled every
/// rw_persistence uses with components uniform on [-1000, 1000] (resampled
/// again in the measure-zero case where both components are zero).
/// Mutates the agent's heading state and consumes its private RNG stream.
Vec2 random_walk_vector(AgentState& agent, const SensorReading& reading, std::mt19937_64& rng,
                        int rw_persistence);

/// Drive toward the nearest collection center for a carrying rescuer; zero
/// for empty rescuers and all searchers.
Vec2 retrieval_vector(const World& world, const AgentState& agent);

/// The controller: V = (v_t + v_c + v_p + v_r) * (1 - p_cl) - v_cl, emitted
/// as unit(V) * max_speed (zero stays zero), plus the mode derived by
/// priority carrying > stopped-at-target (searchers) > beacon > long-range >
/// random walk.
ControlOutput control_vector(const SensorReading& reading, const Vec2& v_r, const Vec2& v_p,
                             AgentKind kind, bool carrying, Scalar max_speed);

/// Composes the random-walk and retrieval drives with an already computed
/// sensor reading. Shared by the reference path and the simulator's
/// accelerated path so both produce identical controls for equal readings.
ControlOutput control_from_reading(const World& world, AgentState& agent,
                                   const SensorReading& reading, std::mt19937_64& rng,
                                   int rw_persistence);

/// Full per-agent pipeline: sense (reference path), then control.
ControlOutput agent_control(World& world, int agent_index, std::mt19937_64& rng,
                            int rw_persistence);

}  // namespace sarsim
