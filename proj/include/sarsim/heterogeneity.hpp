#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "sarsim/types.hpp"

namespace sarsim {

/// The set of controller actions a species can perform, each with a score.
struct BehaviorProfile {
  std::map<std::string, Scalar> scores;
};

/// Sum of the profile's action scores.
Scalar species_score(const BehaviorProfile& profile);

struct ProfileSet {
  BehaviorProfile searcher;
  BehaviorProfile rescuer;
  Scalar max_score = 0.0;
};

/// Score table for all controller actions plus the per-species action lists
/// under each strategy. Actions may share a normalizer slot when they are
/// exclusive variants of one capability (a species only ever has one of
/// them); the normalizer sums the per-slot maxima.
struct ProfileTable {
  std::map<std::string, Scalar> action_scores;
  std::map<std::string, std::string> action_slots;
  std::vector<std::string> searcher_actions;
  std::map<int, std::vector<std::string>> rescuer_actions;  // keyed by strategy tag 1..3

  Scalar max_score() const;
  ProfileSet profiles(StrategyKind strategy) const;
  void validate() const;
};

/// Built-in action scores:
///   A0 0.5 stop beside a short-range target   A1 1.0 transmit beacon
///   A2 1.5 pick up target                     A3 2.0 deliver to collection
///   A4 1.0 long-range approach                A5 0.5 collision avoidance
///   A6 0.5 beacon approach, searchers only    A7 1.0 beacon approach, all hosts
///   A8 1.0 random walk
/// A6/A7 share one slot. Searchers take {A0,A1,A4,A5,A7,A8} (total 5);
/// rescuers take {A2,A3,A4,A5,A7,A8} under Strategy1 (7), swap A7 for A6
/// under Strategy2 (6.5), and additionally drop A4 under Strategy3 (5.5).
/// Normalizer: 8.5.
ProfileTable default_profile_table();

/// Parses a table from lines of:
///   action <tag> <score> [slot]
///   searcher <tag>...
///   rescuer <strategy 1|2|3> <tag>...
/// '#' starts a comment; blank lines are skipped.
ProfileTable load_profile_table(std::istream& in);
ProfileTable load_profile_table_file(const std::string& path);

ProfileSet default_profiles(StrategyKind strategy);

/// |score(a) - score(b)| / max_score.
Scalar interspecies_distance(const BehaviorProfile& a, const BehaviorProfile& b,
                             Scalar max_score);

/// Composition entropy -(p_r ln p_r + p_s ln p_s) with 0 ln 0 = 0.
Scalar entropy(int n_r, int n_s);

/// Rao's quadratic entropy for two species: 2 p_r p_s d_rs^2.
Scalar raos_q(int n_r, int n_s, Scalar d_rs);

struct CompositionPoint {
  int n_r = 0;
  int n_s = 0;
  StrategyKind strategy = StrategyKind::Strategy1;
};

struct HeterogeneityResult {
  Scalar e = 0.0;
  Scalar q = 0.0;
  Scalar h = 0.0;
};

/// E, Q, and H = E*Q for a composition under a strategy's profiles.
HeterogeneityResult heterogeneity_measure(const CompositionPoint& point);
HeterogeneityResult heterogeneity_measure(const CompositionPoint& point,
                                          const ProfileSet& profiles);

}  // namespace sarsim
