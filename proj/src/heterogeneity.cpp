#include "sarsim/heterogeneity.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sarsim {

Scalar species_score(const BehaviorProfile& profile) {
  Scalar total = 0.0;
  for (const auto& [tag, score] : profile.scores) total += score;
  return total;
}

Scalar ProfileTable::max_score() const {
  std::map<std::string, Scalar> slot_max;
  for (const auto& [tag, score] : action_scores) {
    auto it = action_slots.find(tag);
    const std::string& slot = it != action_slots.end() ? it->second : tag;
    auto [entry, inserted] = slot_max.try_emplace(slot, score);
    if (!inserted && score > entry->second) entry->second = score;
  }
  Scalar total = 0.0;
  for (const auto& [slot, score] : slot_max) total += score;
  return total;
}

namespace {

BehaviorProfile pick_actions(const ProfileTable& table, const std::vector<std::string>& tags) {
  BehaviorProfile p;
  for (const auto& tag : tags) {
    auto it = table.action_scores.find(tag);
    if (it == table.action_scores.end()) {
      throw ConfigError("behavior profile references unknown action '" + tag + "'");
    }
    p.scores[tag] = it->second;
  }
  return p;
}

}  // namespace

ProfileSet ProfileTable::profiles(StrategyKind strategy) const {
  validate();
  ProfileSet set;
  set.searcher = pick_actions(*this, searcher_actions);
  set.rescuer = pick_actions(*this, rescuer_actions.at(strategy_to_int(strategy)));
  set.max_score = max_score();
  return set;
}

void ProfileTable::validate() const {
  if (action_scores.empty()) throw ConfigError("profile table has no actions");
  for (const auto& [tag, score] : action_scores) {
    if (!(score >= 0.0)) throw ConfigError("action '" + tag + "' has a negative score");
  }
  auto check_known = [this](const std::vector<std::string>& tags) {
    for (const auto& tag : tags) {
      if (action_scores.find(tag) == action_scores.end()) {
        throw ConfigError("behavior profile references unknown action '" + tag + "'");
      }
    }
  };
  if (searcher_actions.empty()) throw ConfigError("profile table lists no searcher actions");
  check_known(searcher_actions);
  for (int s = 1; s <= 3; ++s) {
    auto it = rescuer_actions.find(s);
    if (it == rescuer_actions.end() || it->second.empty()) {
      throw ConfigError("profile table lists no rescuer actions for strategy " +
                        std::to_string(s));
    }
    check_known(it->second);
  }
  if (!(max_score() > 0.0)) throw ConfigError("profile table normalizer must be positive");
}

ProfileTable default_profile_table() {
  ProfileTable t;
  t.action_scores = {{"A0", 0.5}, {"A1", 1.0}, {"A2", 1.5}, {"A3", 2.0}, {"A4", 1.0},
                     {"A5", 0.5}, {"A6", 0.5}, {"A7", 1.0}, {"A8", 1.0}};
  t.action_slots = {{"A6", "beacon_approach"}, {"A7", "beacon_approach"}};
  t.searcher_actions = {"A0", "A1", "A4", "A5", "A7", "A8"};
  t.rescuer_actions[1] = {"A2", "A3", "A4", "A5", "A7", "A8"};
  t.rescuer_actions[2] = {"A2", "A3", "A4", "A5", "A6", "A8"};
  t.rescuer_actions[3] = {"A2", "A3", "A5", "A6", "A8"};
  return t;
}

ProfileTable load_profile_table(std::istream& in) {
  ProfileTable t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no += 1;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string directive;
    if (!(ss >> directive)) continue;

    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (directive == "action") {
      std::string tag, slot;
      Scalar score = 0.0;
      if (!(ss >> tag >> score)) throw ConfigError("malformed action line" + where);
      ss >> slot;
      t.action_scores[tag] = score;
      if (!slot.empty()) t.action_slots[tag] = slot;
    } else if (directive == "searcher") {
      std::string tag;
      t.searcher_actions.clear();
      while (ss >> tag) t.searcher_actions.push_back(tag);
      if (t.searcher_actions.empty()) throw ConfigError("empty searcher action list" + where);
    } else if (directive == "rescuer") {
      int strategy = 0;
      std::string tag;
      if (!(ss >> strategy) || strategy < 1 || strategy > 3) {
        throw ConfigError("rescuer line needs a strategy tag 1..3" + where);
      }
      auto& list = t.rescuer_actions[strategy];
      list.clear();
      while (ss >> tag) list.push_back(tag);
      if (list.empty()) throw ConfigError("empty rescuer action list" + where);
    } else {
      throw ConfigError("unknown profile directive '" + directive + "'" + where);
    }
  }
  t.validate();
  return t;
}

ProfileTable load_profile_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open profile table: " + path);
  try {
    return load_profile_table(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

ProfileSet default_profiles(StrategyKind strategy) {
  return default_profile_table().profiles(strategy);
}

Scalar interspecies_distance(const BehaviorProfile& a, const BehaviorProfile& b,
                             Scalar max_score) {
  if (!(max_score > 0.0)) throw ConfigError("max_score must be positive");
  return std::abs(species_score(a) - species_score(b)) / max_score;
}

Scalar entropy(int n_r, int n_s) {
  if (n_r < 0 || n_s < 0 || n_r + n_s < 1) {
    throw std::invalid_argument("entropy requires n_r, n_s >= 0 and n_r + n_s >= 1");
  }
  const Scalar n = static_cast<Scalar>(n_r + n_s);
  const Scalar p_r = n_r / n;
  const Scalar p_s = n_s / n;
  Scalar e = 0.0;
  if (p_r > 0.0) e -= p_r * std::log(p_r);
  if (p_s > 0.0) e -= p_s * std::log(p_s);
  return e;
}

Scalar raos_q(int n_r, int n_s, Scalar d_rs) {
  if (n_r < 0 || n_s < 0 || n_r + n_s < 1) {
    throw std::invalid_argument("raos_q requires n_r, n_s >= 0 and n_r + n_s >= 1");
  }
  if (d_rs < 0.0) throw std::invalid_argument("raos_q requires d_rs >= 0");
  const Scalar n = static_cast<Scalar>(n_r + n_s);
  const Scalar p_r = n_r / n;
  const Scalar p_s = n_s / n;
  return 2.0 * p_r * p_s * d_rs * d_rs;
}

HeterogeneityResult heterogeneity_measure(const CompositionPoint& point) {
  return heterogeneity_measure(point, default_profiles(point.strategy));
}

HeterogeneityResult heterogeneity_measure(const CompositionPoint& point,
                                          const ProfileSet& profiles) {
  const Scalar d = interspecies_distance(profiles.searcher, profiles.rescuer,
                                         profiles.max_score);
  HeterogeneityResult r;
  r.e = entropy(point.n_r, point.n_s);
  r.q = raos_q(point.n_r, point.n_s, d);
  r.h = r.e * r.q;
  return r;
}

}  // namespace sarsim
