#include "sarsim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sarsim/rng.hpp"
#include "sarsim/world.hpp"

namespace sarsim {

Simulator::Simulator(World world, const TrialConfig& config)
    : world_(std::move(world)), config_(config) {
  world_.arena.validate();
  world_.sensors.validate();
  for (int k = 0; k < static_cast<int>(world_.targets.size()); ++k) {
    if (world_.targets[k].id != k) {
      throw ConfigError("simulator requires targets indexed by id");
    }
  }

  const int n = static_cast<int>(world_.agents.size());
  walk_rngs_.reserve(n);
  for (int i = 0; i < n; ++i) {
    walk_rngs_.push_back(make_engine(seed_mix({config_.seeds.walk_seed,
                                               static_cast<std::uint64_t>(i)})));
  }
  readings_.resize(n);
  controls_.resize(n);
  transmitting_.assign(n, 0);

  first_reach_.assign(static_cast<std::size_t>(world_.arena.n_t) + 1, -1);
  first_reach_[0] = 0;

  cell_size_ = world_.sensors.d_tl;
  grid_nx_ = std::max(1, static_cast<int>(std::ceil(world_.arena.x / cell_size_)));
  grid_ny_ = std::max(1, static_cast<int>(std::ceil(world_.arena.y / cell_size_)));
  grid_.assign(static_cast<std::size_t>(grid_nx_) * grid_ny_, {});
  for (const auto& t : world_.targets) {
    if (!t.alive) continue;
    int cx = 0, cy = 0;
    grid_index_of(t.position, cx, cy);
    grid_[static_cast<std::size_t>(cy) * grid_nx_ + cx].push_back(t.id);
  }
}

void Simulator::grid_index_of(const Vec2& p, int& cx, int& cy) const {
  cx = std::clamp(static_cast<int>(p.x() / cell_size_), 0, grid_nx_ - 1);
  cy = std::clamp(static_cast<int>(p.y() / cell_size_), 0, grid_ny_ - 1);
}

void Simulator::remove_target_from_grid(int target_id) {
  int cx = 0, cy = 0;
  grid_index_of(world_.targets[target_id].position, cx, cy);
  auto& cell = grid_[static_cast<std::size_t>(cy) * grid_nx_ + cx];
  auto it = std::find(cell.begin(), cell.end(), target_id);
  if (it != cell.end()) {
    *it = cell.back();
    cell.pop_back();
  }
}

void Simulator::sense_all() {
  const int n = static_cast<int>(world_.agents.size());
  const Scalar d_ts2 = world_.sensors.d_ts * world_.sensors.d_ts;
  const Scalar d_tl2 = world_.sensors.d_tl * world_.sensors.d_tl;
  const Scalar d_c2 = world_.sensors.d_c * world_.sensors.d_c;

  // Collision plus both target sensors, all against pre-tick positions.
  for (int i = 0; i < n; ++i) {
    const AgentState& self = world_.agents[i];
    SensorReading r;
    std::tie(r.p_cl, r.v_cl) = collision_sense(world_, i);

    int cx = 0, cy = 0;
    grid_index_of(self.position, cx, cy);
    const bool lr_enabled =
        long_range_enabled(self.kind, world_.strategy, self.carrying.has_value());

    Scalar best_ts_d2 = std::numeric_limits<Scalar>::infinity();
    int best_ts_id = -1;
    Scalar best_tl_d2 = std::numeric_limits<Scalar>::infinity();
    int best_tl_id = -1;
    Vec2 best_tl_v = Vec2::Zero();

    for (int gy = std::max(0, cy - 1); gy <= std::min(grid_ny_ - 1, cy + 1); ++gy) {
      for (int gx = std::max(0, cx - 1); gx <= std::min(grid_nx_ - 1, cx + 1); ++gx) {
        for (int tid : grid_[static_cast<std::size_t>(gy) * grid_nx_ + gx]) {
          const Vec2 d = world_.targets[tid].position - self.position;
          const Scalar d2 = d.squaredNorm();
          if (d2 <= d_ts2 &&
              (d2 < best_ts_d2 || (d2 == best_ts_d2 && tid < best_ts_id))) {
            best_ts_d2 = d2;
            best_ts_id = tid;
          }
          if (d2 <= d_tl2 &&
              (d2 < best_tl_d2 || (d2 == best_tl_d2 && tid < best_tl_id))) {
            best_tl_d2 = d2;
            best_tl_id = tid;
            best_tl_v = d;
          }
        }
      }
    }

    if (best_ts_id >= 0) {
      r.p_ts = 1;
      r.nearest_short_target = best_ts_id;
    }
    if (lr_enabled && r.p_ts == 0 && best_tl_id >= 0) {
      r.p_tl = 1;
      r.v_t = best_tl_v;
    }
    readings_[i] = r;
  }

  // Transmitter flags need every agent's target sensing settled first.
  for (int j = 0; j < n; ++j) {
    const AgentState& a = world_.agents[j];
    bool tx = false;
    if (!a.carrying.has_value()) {
      if (a.kind == AgentKind::Searcher && readings_[j].p_ts == 1) {
        tx = true;
      } else if (readings_[j].p_tl == 1) {
        tx = true;
      }
    }
    transmitting_[j] = tx ? 1 : 0;
  }

  // Beacon reception.
  for (int i = 0; i < n; ++i) {
    const AgentState& self = world_.agents[i];
    SensorReading& r = readings_[i];
    if (self.carrying.has_value() || r.p_ts == 1 || r.p_tl == 1) continue;
    Scalar best_d2 = std::numeric_limits<Scalar>::infinity();
    int best_id = -1;
    Vec2 best_v = Vec2::Zero();
    for (int j = 0; j < n; ++j) {
      if (j == i || !transmitting_[j]) continue;
      if (!host_allowed(world_.strategy, self.kind, world_.agents[j].kind)) continue;
      const Vec2 d = world_.agents[j].position - self.position;
      const Scalar d2 = d.squaredNorm();
      if (d2 > d_c2) continue;
      if (d2 < best_d2 || (d2 == best_d2 && world_.agents[j].id < best_id)) {
        best_d2 = d2;
        best_id = world_.agents[j].id;
        best_v = d;
      }
    }
    if (best_id >= 0) {
      r.p_c = 1;
      r.v_c = best_v;
    }
  }
}

void Simulator::step() {
  const int n = static_cast<int>(world_.agents.size());

  sense_all();

  for (int i = 0; i < n; ++i) {
    controls_[i] = control_from_reading(world_, world_.agents[i], readings_[i], walk_rngs_[i],
                                        config_.rw_persistence);
  }

  const Scalar dt = world_.sensors.dt;
  for (int i = 0; i < n; ++i) {
    world_.agents[i].position =
        clamp_to_arena(world_.arena, world_.agents[i].position + controls_[i].velocity * dt);
  }

  // Pickups, ascending agent order so the lowest id wins contested targets.
  for (int i = 0; i < n; ++i) {
    AgentState& a = world_.agents[i];
    if (a.kind != AgentKind::Rescuer || a.carrying.has_value()) continue;
    if (readings_[i].p_ts != 1) continue;
    const int tid = *readings_[i].nearest_short_target;
    if (!world_.targets[tid].alive) continue;  // a lower id claimed it this tick
    world_.targets[tid].alive = false;
    a.carrying = tid;
    pickups_ += 1;
    remove_target_from_grid(tid);
  }

  // Deliveries.
  const int before = world_.retrieved;
  for (int i = 0; i < n; ++i) {
    AgentState& a = world_.agents[i];
    if (!a.carrying.has_value()) continue;
    if (!inside_collection(world_, a.position)) continue;
    a.carrying.reset();
    world_.retrieved += 1;
  }

  world_.iteration += 1;
  for (int k = before + 1; k <= world_.retrieved; ++k) {
    first_reach_[k] = world_.iteration;
  }
}

TrialRecord run_trial(const ArenaConfig& arena, const SensorConfig& sensors, int n_r, int n_s,
                      StrategyKind strategy, const TrialConfig& config,
                      const std::function<void(const Simulator&)>& observer) {
  if (config.iterations < 0) throw ConfigError("iterations must be non-negative");
  if (config.record_stride < 1) throw ConfigError("record_stride must be at least 1");
  if (config.rw_persistence < 1) throw ConfigError("rw_persistence must be at least 1");

  World world = build_world(arena, sensors, n_r, n_s, strategy, config.seeds.layout_seed,
                            config.seeds.agent_seed);
  Simulator sim(std::move(world), config);

  TrialRecord rec;
  rec.iterations = config.iterations;
  rec.record_stride = config.record_stride;
  rec.n_r = n_r;
  rec.n_s = n_s;
  rec.strategy = strategy;
  rec.seeds = config.seeds;
  rec.dt = sensors.dt;
  rec.n_t = arena.n_t;
  rec.series.reserve(static_cast<std::size_t>(config.iterations / config.record_stride) + 2);
  rec.series.push_back({0, 0});
  if (observer) observer(sim);

  std::int64_t iter = 0;
  bool exhausted_early = false;
  while (iter < config.iterations) {
    sim.step();
    iter += 1;
    const int retrieved = sim.world().retrieved;
    if (iter % config.record_stride == 0 || iter == config.iterations) {
      rec.series.push_back({iter, retrieved});
    }
    if (observer) observer(sim);
    if (!observer && retrieved >= arena.n_t) {
      exhausted_early = iter < config.iterations;
      break;
    }
  }

  if (exhausted_early) {
    // Every target is retrieved; the remaining ticks cannot change anything
    // observable in the record, so synthesize the constant tail.
    std::int64_t next = (iter / config.record_stride + 1) * config.record_stride;
    for (; next < config.iterations; next += config.record_stride) {
      rec.series.push_back({next, arena.n_t});
    }
    if (rec.series.back().iteration != config.iterations) {
      rec.series.push_back({config.iterations, arena.n_t});
    }
  }

  rec.first_reach = sim.first_reach();
  rec.pickups = sim.pickups();
  rec.final_retrieved = sim.world().retrieved;
  return rec;
}

}  // namespace sarsim
