#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "sarsim/world.hpp"

using namespace sarsim;
using namespace test_helpers;

TEST_CASE("build_world creates the full target population, none retrieved") {
  const World w = build_world(ArenaConfig{}, SensorConfig{}, 25, 25,
                              StrategyKind::Strategy1, 1, 2);
  CHECK(w.targets.size() == 250);
  CHECK(w.alive_target_count() == 250);
  CHECK(w.retrieved == 0);
  CHECK(w.carried_count() == 0);
  CHECK(w.iteration == 0);
  for (int k = 0; k < static_cast<int>(w.targets.size()); ++k) {
    CHECK(w.targets[k].id == k);
  }
}

TEST_CASE("rescuers-only build places every agent inside the init zone") {
  const ArenaConfig arena;
  const World w =
      build_world(arena, SensorConfig{}, 25, 0, StrategyKind::Strategy1, 1, 2);
  REQUIRE(w.agents.size() == 25);
  CHECK(w.rescuers_count() == 25);
  CHECK(w.searchers_count() == 0);
  for (const auto& a : w.agents) {
    CHECK(a.kind == AgentKind::Rescuer);
    CHECK(arena.rescuer_init_zone.contains(a.position));
    CHECK(!a.carrying.has_value());
  }
}

TEST_CASE("agents get sequential ids with rescuers first") {
  const World w =
      build_world(ArenaConfig{}, SensorConfig{}, 3, 2, StrategyKind::Strategy2, 9, 9);
  REQUIRE(w.agents.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(w.agents[i].id == i);
    CHECK(w.agents[i].kind == (i < 3 ? AgentKind::Rescuer : AgentKind::Searcher));
  }
}

TEST_CASE("layout seed fixes targets independently of the agent seed") {
  const World a =
      build_world(ArenaConfig{}, SensorConfig{}, 10, 10, StrategyKind::Strategy1, 7, 100);
  const World b =
      build_world(ArenaConfig{}, SensorConfig{}, 10, 10, StrategyKind::Strategy1, 7, 200);
  REQUIRE(a.targets.size() == b.targets.size());
  for (std::size_t k = 0; k < a.targets.size(); ++k) {
    CHECK(vec_eq(a.targets[k].position, b.targets[k].position));
  }
  bool any_agent_differs = false;
  for (std::size_t i = 0; i < a.agents.size(); ++i) {
    if (!vec_eq(a.agents[i].position, b.agents[i].position)) any_agent_differs = true;
  }
  CHECK(any_agent_differs);
}

TEST_CASE("target layout is a pure function of arena and layout seed") {
  const ArenaConfig arena;
  const auto a = sample_target_layout(arena, 12345);
  const auto b = sample_target_layout(arena, 12345);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(vec_eq(a[k], b[k]));
  const auto c = sample_target_layout(arena, 12346);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!vec_eq(a[k], c[k])) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("no sampled target lies inside a collection square") {
  const ArenaConfig arena;
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 99ull}) {
    const auto layout = sample_target_layout(arena, seed);
    REQUIRE(layout.size() == 250);
    for (const auto& p : layout) {
      CHECK(!inside_any_square(arena.collection_points, p));
      CHECK(p.x() >= 0.0);
      CHECK(p.x() <= arena.x);
      CHECK(p.y() >= 0.0);
      CHECK(p.y() <= arena.y);
    }
  }
}

TEST_CASE("inside_collection includes the closed square boundary") {
  World w = empty_world();
  const CollectionSquare sq = w.arena.collection_points[0];
  CHECK(inside_collection(w, sq.center));
  CHECK(inside_collection(w, sq.center + Vec2(sq.half_side, 0.0)));
  CHECK(inside_collection(w, sq.center + Vec2(sq.half_side, sq.half_side)));
  CHECK(!inside_collection(w, sq.center + Vec2(sq.half_side + 1e-9, 0.0)));
  CHECK(!inside_collection(w, Vec2(50.0, 50.0)));
}

TEST_CASE("nearest collection center: exact hit, ties, and brute-force agreement") {
  World w = empty_world();

  SUBCASE("point on a center has distance zero") {
    const auto [idx, dist] = nearest_collection_index(w, w.arena.collection_points[2].center);
    CHECK(idx == 2);
    CHECK(dist == 0.0);
  }

  SUBCASE("arena midpoint ties across all four corners; lowest index wins") {
    const auto [idx, dist] = nearest_collection_index(w, Vec2(50.0, 50.0));
    CHECK(idx == 0);
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (const auto& sq : w.arena.collection_points) {
      best = std::min(best, (sq.center - Vec2(50.0, 50.0)).norm());
    }
    CHECK(dist == doctest::Approx(best).epsilon(1e-15));
  }

  SUBCASE("two equidistant centers resolve to the lower index") {
    // (50, 12.5) sits exactly between centers 0=(12.5,12.5) and 2=(87.5,12.5).
    const auto [idx, dist] = nearest_collection_index(w, Vec2(50.0, 12.5));
    CHECK(idx == 0);
    CHECK(dist == doctest::Approx(37.5).epsilon(1e-15));
  }

  SUBCASE("exhaustive comparison on a grid of probe points") {
    for (int gx = 0; gx <= 10; ++gx) {
      for (int gy = 0; gy <= 10; ++gy) {
        const Vec2 p(gx * 10.0, gy * 10.0);
        const auto [idx, dist] = nearest_collection_index(w, p);
        const auto [center, cdist] = nearest_collection_point(w, p);
        CHECK(vec_eq(center, w.arena.collection_points[idx].center));
        CHECK(dist == cdist);
        for (int j = 0; j < w.arena.n_c(); ++j) {
          const Scalar dj = (w.arena.collection_points[j].center - p).norm();
          CHECK(dist <= dj + 1e-15);
          if (j < idx) CHECK(dj > dist);  // ties must have gone to the lower index
        }
      }
    }
  }
}

TEST_CASE("clamp_to_arena pulls positions just inside the boundary") {
  const ArenaConfig arena;
  const Vec2 in = clamp_to_arena(arena, Vec2(-5.0, 50.0));
  CHECK(in.x() == kWallInset);
  CHECK(in.y() == 50.0);
  const Vec2 corner = clamp_to_arena(arena, Vec2(200.0, -1.0));
  CHECK(corner.x() == arena.x - kWallInset);
  CHECK(corner.y() == kWallInset);
  const Vec2 interior = clamp_to_arena(arena, Vec2(42.0, 58.0));
  CHECK(vec_eq(interior, Vec2(42.0, 58.0)));
}

TEST_CASE("configuration validation rejects broken setups") {
  SUBCASE("sensor ranges must be strictly ordered") {
    SensorConfig s;
    s.d_ts = s.d_tl;  // collapse the ordering
    CHECK_THROWS_AS(s.validate(), ConfigError);
    SensorConfig neg;
    neg.d_cl = -1.0;
    CHECK_THROWS_AS(neg.validate(), ConfigError);
    SensorConfig zero_dt;
    zero_dt.dt = 0.0;
    CHECK_THROWS_AS(zero_dt.validate(), ConfigError);
  }

  SUBCASE("zero-area init zone is rejected") {
    ArenaConfig arena;
    arena.rescuer_init_zone = Rect{90.0, 90.0, 85.0, 100.0};
    CHECK_THROWS_AS(
        build_world(arena, SensorConfig{}, 5, 0, StrategyKind::Strategy1, 1, 1),
        ConfigError);
  }

  SUBCASE("collection square outside the arena is rejected") {
    ArenaConfig arena;
    arena.collection_points[0].center = Vec2(-20.0, 50.0);
    CHECK_THROWS_AS(arena.validate(), ConfigError);
  }

  SUBCASE("at least one agent is required") {
    CHECK_THROWS_AS(
        build_world(ArenaConfig{}, SensorConfig{}, 0, 0, StrategyKind::Strategy1, 1, 1),
        ConfigError);
  }

  SUBCASE("strategy tags outside 1..3 are rejected") {
    CHECK_THROWS_AS(strategy_from_int(0), ConfigError);
    CHECK_THROWS_AS(strategy_from_int(4), ConfigError);
    CHECK(strategy_from_int(2) == StrategyKind::Strategy2);
    CHECK(strategy_to_int(StrategyKind::Strategy3) == 3);
  }
}
