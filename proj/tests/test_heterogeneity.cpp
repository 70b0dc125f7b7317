#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "sarsim/heterogeneity.hpp"

using namespace sarsim;

namespace {

/// Rao's quadratic entropy from first principles: sum over every ordered
/// agent pair of p_i * p_j * d(kind_i, kind_j)^2 with p_i = 1/n.
Scalar brute_force_rao(int n_r, int n_s, Scalar d_rs) {
  const int n = n_r + n_s;
  std::vector<bool> is_rescuer(static_cast<std::size_t>(n));
  for (int i = 0; i < n_r; ++i) is_rescuer[i] = true;
  const Scalar p = 1.0 / n;
  Scalar q = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Scalar d = is_rescuer[i] == is_rescuer[j] ? 0.0 : d_rs;
      q += p * p * d * d;
    }
  }
  return q;
}

}  // namespace

TEST_CASE("species scores and normalizer are exact") {
  CHECK(species_score(default_profiles(StrategyKind::Strategy1).searcher) == 5.0);
  CHECK(species_score(default_profiles(StrategyKind::Strategy1).rescuer) == 7.0);
  CHECK(species_score(default_profiles(StrategyKind::Strategy2).rescuer) == 6.5);
  CHECK(species_score(default_profiles(StrategyKind::Strategy3).rescuer) == 5.5);
  for (int s = 1; s <= 3; ++s) {
    const auto profiles = default_profiles(strategy_from_int(s));
    CHECK(species_score(profiles.searcher) == 5.0);
    CHECK(profiles.max_score == 8.5);
  }
  CHECK(species_score(BehaviorProfile{}) == 0.0);
}

TEST_CASE("interspecies distances per strategy") {
  const auto p1 = default_profiles(StrategyKind::Strategy1);
  const auto p2 = default_profiles(StrategyKind::Strategy2);
  const auto p3 = default_profiles(StrategyKind::Strategy3);
  const Scalar d1 = interspecies_distance(p1.rescuer, p1.searcher, p1.max_score);
  const Scalar d2 = interspecies_distance(p2.rescuer, p2.searcher, p2.max_score);
  const Scalar d3 = interspecies_distance(p3.rescuer, p3.searcher, p3.max_score);
  CHECK(d1 == doctest::Approx(2.0 / 8.5).epsilon(1e-12));
  CHECK(d1 == doctest::Approx(0.235294).epsilon(1e-6));
  CHECK(d2 == doctest::Approx(1.5 / 8.5).epsilon(1e-12));
  CHECK(d3 == doctest::Approx(0.5 / 8.5).epsilon(1e-12));
  CHECK(d3 == doctest::Approx(0.058824).epsilon(1e-5));
  CHECK(d1 > d2);
  CHECK(d2 > d3);
  CHECK(interspecies_distance(p1.rescuer, p1.rescuer, p1.max_score) == 0.0);
  CHECK_THROWS_AS(interspecies_distance(p1.rescuer, p1.searcher, 0.0), ConfigError);
}

TEST_CASE("composition entropy") {
  CHECK(entropy(25, 25) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(entropy(50, 0) == 0.0);
  CHECK(entropy(0, 50) == 0.0);
  CHECK(entropy(40, 10) == doctest::Approx(0.5004024235381879).epsilon(1e-12));
  CHECK_THROWS_AS(entropy(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(entropy(-1, 5), std::invalid_argument);
}

TEST_CASE("quadratic entropy for two species") {
  const Scalar d1 = 2.0 / 8.5;
  CHECK(raos_q(25, 25, d1) == doctest::Approx(2.0 * 0.25 * d1 * d1).epsilon(1e-15));
  CHECK(raos_q(25, 25, d1) == doctest::Approx(0.0276817).epsilon(1e-5));
  CHECK(raos_q(25, 25, 0.0) == 0.0);
  CHECK(raos_q(50, 0, d1) == 0.0);
  CHECK(raos_q(0, 50, d1) == 0.0);
  CHECK_THROWS_AS(raos_q(0, 0, d1), std::invalid_argument);
  CHECK_THROWS_AS(raos_q(5, 5, -0.1), std::invalid_argument);
}

TEST_CASE("raos_q equals the brute-force pairwise sum for all teams up to 50") {
  for (int n = 1; n <= 50; ++n) {
    for (int n_r = 0; n_r <= n; ++n_r) {
      for (Scalar d : {2.0 / 8.5, 1.5 / 8.5, 0.5 / 8.5, 0.123}) {
        const Scalar lib = raos_q(n_r, n - n_r, d);
        const Scalar ref = brute_force_rao(n_r, n - n_r, d);
        REQUIRE(std::abs(lib - ref) <= 1e-12);
      }
    }
  }
}

TEST_CASE("combined measure matches its closed form") {
  const auto h1 = heterogeneity_measure({25, 25, StrategyKind::Strategy1});
  const Scalar expected1 = std::log(2.0) * 2.0 * 0.25 * (2.0 / 8.5) * (2.0 / 8.5);
  CHECK(std::abs(h1.h - expected1) <= 1e-12);
  CHECK(h1.e == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(h1.h == doctest::Approx(h1.e * h1.q).epsilon(1e-15));

  const auto h3 = heterogeneity_measure({25, 25, StrategyKind::Strategy3});
  const Scalar expected3 = std::log(2.0) * 2.0 * 0.25 * (0.5 / 8.5) * (0.5 / 8.5);
  CHECK(std::abs(h3.h - expected3) <= 1e-12);

  CHECK(heterogeneity_measure({50, 0, StrategyKind::Strategy1}).h == 0.0);
  CHECK(heterogeneity_measure({0, 50, StrategyKind::Strategy2}).h == 0.0);
}

TEST_CASE("measure is symmetric in the composition") {
  for (int s = 1; s <= 3; ++s) {
    const auto strategy = strategy_from_int(s);
    for (int n_r = 0; n_r <= 50; n_r += 5) {
      const auto a = heterogeneity_measure({n_r, 50 - n_r, strategy});
      const auto b = heterogeneity_measure({50 - n_r, n_r, strategy});
      CHECK(a.h == b.h);
      CHECK(a.e == b.e);
      CHECK(a.q == b.q);
    }
  }
}

TEST_CASE("the balanced composition is the unique maximum over a fixed-size team") {
  for (int s = 1; s <= 3; ++s) {
    const auto strategy = strategy_from_int(s);
    const Scalar peak = heterogeneity_measure({25, 25, strategy}).h;
    CHECK(peak > 0.0);
    for (int n_s = 0; n_s <= 45; n_s += 5) {
      const int n_r = 50 - n_s;
      if (n_r == 25) continue;
      CHECK(heterogeneity_measure({n_r, n_s, strategy}).h < peak);
    }
    CHECK(heterogeneity_measure({50, 0, strategy}).h == 0.0);
  }
}

TEST_CASE("profile tables round-trip through the text format") {
  const std::string text =
      "# behavior capability scores\n"
      "action stop_at_target 0.5\n"
      "action transmit 1\n"
      "action pickup 1.5\n"
      "action deliver 2\n"
      "action long_range_approach 1\n"
      "action collision_avoidance 0.5\n"
      "action beacon_approach_masked 0.5 beacon\n"
      "action beacon_approach_full 1 beacon\n"
      "action random_walk 1\n"
      "searcher stop_at_target transmit long_range_approach collision_avoidance "
      "beacon_approach_full random_walk\n"
      "rescuer 1 pickup deliver long_range_approach collision_avoidance "
      "beacon_approach_full random_walk\n"
      "rescuer 2 pickup deliver long_range_approach collision_avoidance "
      "beacon_approach_masked random_walk\n"
      "rescuer 3 pickup deliver collision_avoidance beacon_approach_masked "
      "random_walk\n";
  std::istringstream in(text);
  const ProfileTable table = load_profile_table(in);
  CHECK(table.max_score() == 8.5);
  CHECK(species_score(table.profiles(StrategyKind::Strategy1).searcher) == 5.0);
  CHECK(species_score(table.profiles(StrategyKind::Strategy1).rescuer) == 7.0);
  CHECK(species_score(table.profiles(StrategyKind::Strategy2).rescuer) == 6.5);
  CHECK(species_score(table.profiles(StrategyKind::Strategy3).rescuer) == 5.5);

  // The built-in table produces the same aggregates.
  const ProfileTable builtin = default_profile_table();
  CHECK(builtin.max_score() == table.max_score());
  for (int s = 1; s <= 3; ++s) {
    const auto strategy = strategy_from_int(s);
    CHECK(species_score(builtin.profiles(strategy).rescuer) ==
          species_score(table.profiles(strategy).rescuer));
  }
}

TEST_CASE("profile table parse and validation failures") {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_profile_table(in);
  };

  CHECK_THROWS_WITH_AS(load("frobnicate a 1\n"),
                       doctest::Contains("unknown profile directive"), ConfigError);
  CHECK_THROWS_WITH_AS(load("action broken\n"), doctest::Contains("line 1"),
                       ConfigError);
  CHECK_THROWS_AS(load("action a 1\nrescuer 9 a\n"), ConfigError);
  CHECK_THROWS_AS(load("action a 1\nsearcher\n"), ConfigError);
  // Species lists may only reference known actions.
  CHECK_THROWS_WITH_AS(
      load("action a 1\nsearcher a\nrescuer 1 ghost\nrescuer 2 a\nrescuer 3 a\n"),
      doctest::Contains("unknown action"), ConfigError);
  // Every strategy needs a rescuer list.
  CHECK_THROWS_AS(load("action a 1\nsearcher a\nrescuer 1 a\n"), ConfigError);
  CHECK_THROWS_AS(load_profile_table_file("/nonexistent/profile.txt"), ConfigError);
}
