#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sarsim/types.hpp"

namespace sarsim {

/// One agent's complete sensor snapshot for a single tick. Probability bits
/// are 0/1 indicators; every vector is zero whenever its bit is zero.
/// Structural invariants: p_tl = 1 implies p_ts = 0 (short range wins), and
/// p_c = 1 implies p_ts = p_tl = 0 (detections suppress reception).
struct SensorReading {
  int p_cl = 0;
  Vec2 v_cl = Vec2::Zero();
  int p_ts = 0;
  std::optional<int> nearest_short_target;
  int p_tl = 0;
  Vec2 v_t = Vec2::Zero();
  int p_c = 0;
  Vec2 v_c = Vec2::Zero();
};

/// Collision sensing against other agents and the four walls. Returns
/// (p_cl, v_cl) with v_cl the sum of (other - self) displacement vectors for
/// every agent within d_cl (closed boundary), plus (wall point - self) for
/// the nearest point on each wall within d_cl. Exactly coincident agent
/// pairs repel along a deterministic pseudo-direction so neither can freeze.
std::pair<int, Vec2> collision_sense(const World& world, int agent_i);

/// Presence-only detection of alive ground targets within d_ts. Reports the
/// nearest such target id (lowest id on distance ties) but no vector: this
/// sensor cannot localize.
std::pair<int, std::optional<int>> short_range_sense(const World& world, int agent_i);

/// Long-range target bearing: (p_tl, v_t) where v_t points to the nearest
/// alive target within d_tl. Suppressed (0, zero) when the short-range
/// sensor is already firing or when `enabled` is false.
std::pair<int, Vec2> long_range_sense(const World& world, int agent_i, bool enabled);

/// Beacon reception from the nearest transmitting host within d_c. `hosts`
/// lists the agent indices this agent listens to (never itself). Reception
/// requires the receiver to be idle: no short- or long-range detection of
/// its own and nothing carried.
std::pair<int, Vec2> comm_sense(const World& world, int agent_i, const std::vector<int>& hosts);

/// Whether this agent kind runs its long-range target sensor under the given
/// strategy. Searchers always do; rescuers lose it under Strategy3 and while
/// carrying (a loaded rescuer heads for a collection point regardless).
bool long_range_enabled(AgentKind kind, StrategyKind strategy, bool carrying);

/// Whether agent_j currently broadcasts a beacon: it is not carrying and
/// either its long-range sensor fires, or it is a searcher parked at a
/// short-range target (the stopped-searcher beacon).
bool is_transmitting(const World& world, int agent_j);

/// Whether a receiver of `receiver_kind` listens to a host of `host_kind`
/// under `strategy`. Searchers listen to everyone; rescuers listen to
/// searchers only under Strategy2/Strategy3.
bool host_allowed(StrategyKind strategy, AgentKind receiver_kind, AgentKind host_kind);

/// Reference composition of all four sensors for one agent, wiring strategy
/// rules into host selection and long-range enablement. Pure with respect to
/// the world snapshot; the simulator's accelerated path must produce
/// identical readings.
SensorReading sense_agent(const World& world, int agent_i);

/// Deterministic unit separation direction for an exactly coincident agent
/// pair, derived from the id difference so relabeling all agents by a
/// constant shift preserves outcomes. The lower-id agent sees the other at
/// +dir * (d_cl / 2); the higher-id agent sees the mirror image.
Vec2 coincident_pair_direction(int id_low, int id_high);

}  // namespace sarsim
