#include "sarsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sarsim/rng.hpp"

namespace sarsim {

StrategyKind strategy_from_int(int tag) {
  if (tag < 1 || tag > 3) {
    throw ConfigError("strategy must be 1, 2 or 3 (got " + std::to_string(tag) + ")");
  }
  return static_cast<StrategyKind>(tag);
}

std::vector<CollectionSquare> ArenaConfig::default_collection_points() {
  return {
      {Vec2(12.5, 12.5), 4.0},
      {Vec2(12.5, 87.5), 4.0},
      {Vec2(87.5, 12.5), 4.0},
      {Vec2(87.5, 87.5), 4.0},
  };
}

void ArenaConfig::validate() const {
  if (!(x > 0.0) || !(y > 0.0)) throw ConfigError("arena dimensions must be positive");
  if (!std::isfinite(x) || !std::isfinite(y)) throw ConfigError("arena dimensions must be finite");
  if (n_t < 0) throw ConfigError("n_t must be non-negative");
  if (collection_points.empty()) throw ConfigError("at least one collection point required");
  for (const auto& sq : collection_points) {
    if (!(sq.half_side > 0.0)) throw ConfigError("collection square side must be positive");
    if (sq.center.x() - sq.half_side < 0.0 || sq.center.x() + sq.half_side > x ||
        sq.center.y() - sq.half_side < 0.0 || sq.center.y() + sq.half_side > y) {
      throw ConfigError("collection square extends outside the arena");
    }
  }
  const Rect& z = rescuer_init_zone;
  if (!(z.width() > 0.0) || !(z.height() > 0.0)) {
    throw ConfigError("rescuer init zone has zero area");
  }
  if (z.x_min < 0.0 || z.x_max > x || z.y_min < 0.0 || z.y_max > y) {
    throw ConfigError("rescuer init zone extends outside the arena");
  }
}

void SensorConfig::validate() const {
  if (!(d_cl > 0.0)) throw ConfigError("d_cl must be positive");
  if (!(d_cl < d_ts && d_ts < d_tl && d_tl < d_c)) {
    throw ConfigError("sensor ranges must satisfy d_cl < d_ts < d_tl < d_c");
  }
  if (!(max_speed > 0.0)) throw ConfigError("max_speed must be positive");
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
}

int World::carried_count() const {
  int n = 0;
  for (const auto& a : agents) n += a.carrying.has_value() ? 1 : 0;
  return n;
}

int World::alive_target_count() const {
  int n = 0;
  for (const auto& t : targets) n += t.alive ? 1 : 0;
  return n;
}

int World::searchers_count() const {
  int n = 0;
  for (const auto& a : agents) n += a.kind == AgentKind::Searcher ? 1 : 0;
  return n;
}

int World::rescuers_count() const {
  int n = 0;
  for (const auto& a : agents) n += a.kind == AgentKind::Rescuer ? 1 : 0;
  return n;
}

bool inside_any_square(const std::vector<CollectionSquare>& squares, const Vec2& p) {
  for (const auto& sq : squares) {
    if (std::abs(p.x() - sq.center.x()) <= sq.half_side &&
        std::abs(p.y() - sq.center.y()) <= sq.half_side) {
      return true;
    }
  }
  return false;
}

bool inside_collection(const World& world, const Vec2& p) {
  return inside_any_square(world.arena.collection_points, p);
}

std::pair<int, Scalar> nearest_collection_index(const World& world, const Vec2& p) {
  const auto& cps = world.arena.collection_points;
  int best = 0;
  Scalar best_d2 = std::numeric_limits<Scalar>::infinity();
  for (int j = 0; j < static_cast<int>(cps.size()); ++j) {
    const Scalar d2 = (cps[j].center - p).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = j;
    }
  }
  return {best, std::sqrt(best_d2)};
}

std::pair<Vec2, Scalar> nearest_collection_point(const World& world, const Vec2& p) {
  auto [idx, dist] = nearest_collection_index(world, p);
  return {world.arena.collection_points[idx].center, dist};
}

Vec2 clamp_to_arena(const ArenaConfig& arena, const Vec2& p) {
  return Vec2(std::clamp(p.x(), kWallInset, arena.x - kWallInset),
              std::clamp(p.y(), kWallInset, arena.y - kWallInset));
}

std::vector<Vec2> sample_target_layout(const ArenaConfig& arena, std::uint64_t layout_seed) {
  arena.validate();
  auto rng = make_engine(layout_seed);
  std::uniform_real_distribution<Scalar> ux(0.0, arena.x);
  std::uniform_real_distribution<Scalar> uy(0.0, arena.y);
  std::vector<Vec2> out;
  out.reserve(arena.n_t);
  long attempts = 0;
  const long max_attempts = 1000L * std::max(arena.n_t, 1) + 100000L;
  while (static_cast<int>(out.size()) < arena.n_t) {
    if (++attempts > max_attempts) {
      throw ConfigError("target sampling failed: collection squares cover too much of the arena");
    }
    Vec2 p(ux(rng), uy(rng));
    if (inside_any_square(arena.collection_points, p)) continue;
    out.push_back(p);
  }
  return out;
}

World build_world(const ArenaConfig& arena, const SensorConfig& sensors, int n_r, int n_s,
                  StrategyKind strategy, std::uint64_t layout_seed, std::uint64_t agent_seed) {
  arena.validate();
  sensors.validate();
  if (n_r < 0 || n_s < 0) throw ConfigError("agent counts must be non-negative");
  if (n_r + n_s < 1) throw ConfigError("at least one agent required");

  World w;
  w.arena = arena;
  w.sensors = sensors;
  w.strategy = strategy;

  auto layout = sample_target_layout(arena, layout_seed);
  w.targets.reserve(layout.size());
  for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
    w.targets.push_back({i, layout[i], true});
  }

  auto rng = make_engine(agent_seed);
  std::uniform_real_distribution<Scalar> zx(arena.rescuer_init_zone.x_min, arena.rescuer_init_zone.x_max);
  std::uniform_real_distribution<Scalar> zy(arena.rescuer_init_zone.y_min, arena.rescuer_init_zone.y_max);
  std::uniform_real_distribution<Scalar> ax(0.0, arena.x);
  std::uniform_real_distribution<Scalar> ay(0.0, arena.y);

  w.agents.reserve(n_r + n_s);
  for (int i = 0; i < n_r; ++i) {
    AgentState a;
    a.id = static_cast<int>(w.agents.size());
    a.kind = AgentKind::Rescuer;
    a.position = clamp_to_arena(arena, Vec2(zx(rng), zy(rng)));
    w.agents.push_back(a);
  }
  for (int i = 0; i < n_s; ++i) {
    AgentState a;
    a.id = static_cast<int>(w.agents.size());
    a.kind = AgentKind::Searcher;
    a.position = clamp_to_arena(arena, Vec2(ax(rng), ay(rng)));
    w.agents.push_back(a);
  }
  return w;
}

}  // namespace sarsim
