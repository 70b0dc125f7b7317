#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sarsim/types.hpp"

namespace sarsim {

/// Agents are clamped this far inside the walls so the wall repulsion vector
/// never degenerates to zero length.
inline constexpr Scalar kWallInset = 1e-9;

/// Samples n_t target positions uniformly in the arena, resampling any draw
/// that lands inside a collection square. Pure function of (arena, seed).
std::vector<Vec2> sample_target_layout(const ArenaConfig& arena, std::uint64_t layout_seed);

/// Constructs a reproducible initial world. Targets are driven solely by
/// layout_seed; agent placement (rescuers first, ids 0..n_r-1, inside the
/// init zone; then searchers anywhere) is driven by agent_seed.
World build_world(const ArenaConfig& arena, const SensorConfig& sensors, int n_r, int n_s,
                  StrategyKind strategy, std::uint64_t layout_seed, std::uint64_t agent_seed);

bool inside_any_square(const std::vector<CollectionSquare>& squares, const Vec2& p);

/// True iff p lies within any collection square, boundary included.
bool inside_collection(const World& world, const Vec2& p);

/// Index of the collection center minimizing the distance to p; ties break
/// toward the lowest index.
std::pair<int, Scalar> nearest_collection_index(const World& world, const Vec2& p);
std::pair<Vec2, Scalar> nearest_collection_point(const World& world, const Vec2& p);

Vec2 clamp_to_arena(const ArenaConfig& arena, const Vec2& p);

}  // namespace sarsim
