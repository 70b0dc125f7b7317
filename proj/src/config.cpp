#include "sarsim/config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace sarsim {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& key, const std::string& message, int line_no) {
  std::string where = line_no > 0 ? " (line " + std::to_string(line_no) + ")" : "";
  throw ConfigError("config key '" + key + "': " + message + where);
}

Scalar parse_scalar(const std::string& key, const std::string& value, int line_no) {
  std::size_t used = 0;
  Scalar v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    fail(key, "expected a number, got '" + value + "'", line_no);
  }
  if (used != value.size()) fail(key, "trailing characters in '" + value + "'", line_no);
  return v;
}

std::int64_t parse_int(const std::string& key, const std::string& value, int line_no) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    fail(key, "expected an integer, got '" + value + "'", line_no);
  }
  if (used != value.size()) fail(key, "trailing characters in '" + value + "'", line_no);
  return v;
}

std::vector<Scalar> parse_scalar_list(const std::string& key, const std::string& value,
                                      char sep, int line_no) {
  std::vector<Scalar> out;
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(parse_scalar(key, trim(part), line_no));
  return out;
}

CostModel parse_cost(const std::string& key, const std::string& value, int line_no) {
  const auto parts = parse_scalar_list(key, value, ':', line_no);
  if (parts.size() != 2) fail(key, "expected c_r:c_s, got '" + value + "'", line_no);
  return CostModel{parts[0], parts[1]};
}

}  // namespace

void RunConfig::validate() const {
  arena.validate();
  sensors.validate();
  if (iterations < 0) throw ConfigError("iterations must be non-negative");
  if (record_stride < 1) throw ConfigError("record_stride must be at least 1");
  if (rw_persistence < 1) throw ConfigError("rw_persistence must be at least 1");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (threads < 0) throw ConfigError("threads must be non-negative");
  if (tau_threshold < 0) throw ConfigError("tau_threshold must be non-negative");
  for (const auto& pair : costs) {
    if (!(pair.first.c_r > 0.0) || !(pair.first.c_s > 0.0) || !(pair.second.c_r > 0.0) ||
        !(pair.second.c_s > 0.0)) {
      throw ConfigError("cost components must be positive");
    }
  }
}

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value,
                        int line_no) {
  if (key == "arena_x") {
    config.arena.x = parse_scalar(key, value, line_no);
  } else if (key == "arena_y") {
    config.arena.y = parse_scalar(key, value, line_no);
  } else if (key == "n_t") {
    config.arena.n_t = static_cast<int>(parse_int(key, value, line_no));
  } else if (key == "collection_centers") {
    std::vector<CollectionSquare> squares;
    std::stringstream ss(value);
    std::string part;
    const Scalar half = config.arena.collection_points.empty()
                            ? 4.0
                            : config.arena.collection_points.front().half_side;
    while (std::getline(ss, part, ';')) {
      const auto xy = parse_scalar_list(key, trim(part), ':', line_no);
      if (xy.size() != 2) fail(key, "expected x:y pairs separated by ';'", line_no);
      squares.push_back({Vec2(xy[0], xy[1]), half});
    }
    if (squares.empty()) fail(key, "needs at least one center", line_no);
    config.arena.collection_points = squares;
  } else if (key == "collection_half_side") {
    const Scalar half = parse_scalar(key, value, line_no);
    for (auto& sq : config.arena.collection_points) sq.half_side = half;
  } else if (key == "rescuer_zone") {
    const auto parts = parse_scalar_list(key, value, ':', line_no);
    if (parts.size() != 4) fail(key, "expected xmin:xmax:ymin:ymax", line_no);
    config.arena.rescuer_init_zone = Rect{parts[0], parts[1], parts[2], parts[3]};
  } else if (key == "d_cl") {
    config.sensors.d_cl = parse_scalar(key, value, line_no);
  } else if (key == "d_ts") {
    config.sensors.d_ts = parse_scalar(key, value, line_no);
  } else if (key == "d_tl") {
    config.sensors.d_tl = parse_scalar(key, value, line_no);
  } else if (key == "d_c") {
    config.sensors.d_c = parse_scalar(key, value, line_no);
  } else if (key == "max_speed") {
    config.sensors.max_speed = parse_scalar(key, value, line_no);
  } else if (key == "dt") {
    config.sensors.dt = parse_scalar(key, value, line_no);
  } else if (key == "iterations") {
    config.iterations = parse_int(key, value, line_no);
  } else if (key == "record_stride") {
    config.record_stride = static_cast<int>(parse_int(key, value, line_no));
  } else if (key == "rw_persistence") {
    config.rw_persistence = static_cast<int>(parse_int(key, value, line_no));
  } else if (key == "trials") {
    config.trials = static_cast<int>(parse_int(key, value, line_no));
  } else if (key == "threads") {
    config.threads = static_cast<int>(parse_int(key, value, line_no));
  } else if (key == "tau_threshold") {
    config.tau_threshold = static_cast<int>(parse_int(key, value, line_no));
  } else if (key == "cost_s1_a") {
    config.costs[0].first = parse_cost(key, value, line_no);
  } else if (key == "cost_s1_b") {
    config.costs[0].second = parse_cost(key, value, line_no);
  } else if (key == "cost_s2_a") {
    config.costs[1].first = parse_cost(key, value, line_no);
  } else if (key == "cost_s2_b") {
    config.costs[1].second = parse_cost(key, value, line_no);
  } else if (key == "cost_s3_a") {
    config.costs[2].first = parse_cost(key, value, line_no);
  } else if (key == "cost_s3_b") {
    config.costs[2].second = parse_cost(key, value, line_no);
  } else {
    std::string where = line_no > 0 ? " (line " + std::to_string(line_no) + ")" : "";
    throw ConfigError("unknown config key '" + key + "'" + where);
  }
}

namespace {

void apply_line(RunConfig& config, const std::string& raw, int line_no) {
  std::string line = raw;
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  line = trim(line);
  if (line.empty()) return;
  const auto eq = line.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("expected key=value (line " + std::to_string(line_no) + "): '" + line +
                      "'");
  }
  apply_config_entry(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
}

}  // namespace

RunConfig parse_run_config(std::istream& in, const std::vector<std::string>& overrides) {
  RunConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no += 1;
    apply_line(config, line, line_no);
  }
  for (const auto& entry : overrides) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("override must be key=value: '" + entry + "'");
    }
    apply_config_entry(config, trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
  }
  config.validate();
  return config;
}

RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides) {
  if (path.empty()) {
    std::istringstream empty;
    return parse_run_config(empty, overrides);
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  try {
    return parse_run_config(in, overrides);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

SweepConfig to_sweep_config(const RunConfig& config, std::uint64_t base_seed) {
  SweepConfig sc;
  sc.arena = config.arena;
  sc.sensors = config.sensors;
  sc.iterations = config.iterations;
  sc.record_stride = config.record_stride;
  sc.rw_persistence = config.rw_persistence;
  sc.trials = config.trials;
  sc.base_seed = base_seed;
  sc.threads = config.threads;
  sc.tau_threshold = config.tau_threshold;
  sc.costs = config.costs;
  return sc;
}

}  // namespace sarsim
