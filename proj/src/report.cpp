#include "sarsim/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sarsim/svg.hpp"

namespace sarsim {

namespace {

constexpr const char* kSummaryHeader =
    "scenario,strategy,n_r,n_s,trials,censored,tau_mean_iter,tau_std_iter,tau_mean_s,"
    "E,Q,H,efficiency_cost_a,efficiency_cost_b";
constexpr const char* kSeriesHeader = "scenario,strategy,n_r,n_s,trial,iteration,retrieved";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

[[noreturn]] void row_error(const std::string& path, int row, const std::string& message) {
  throw std::runtime_error(path + " row " + std::to_string(row) + ": " + message);
}

std::int64_t field_int(const std::string& path, int row, const std::string& field) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(field, &used);
  } catch (const std::exception&) {
    row_error(path, row, "expected an integer, got '" + field + "'");
  }
  if (used != field.size()) row_error(path, row, "trailing characters in '" + field + "'");
  return v;
}

Scalar field_num(const std::string& path, int row, const std::string& field) {
  std::size_t used = 0;
  Scalar v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    row_error(path, row, "expected a number, got '" + field + "'");
  }
  if (used != field.size()) row_error(path, row, "trailing characters in '" + field + "'");
  return v;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::vector<SummaryRow> read_summary_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open summary CSV: " + path);
  std::string line;
  int row = 0;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  row += 1;
  if (strip_cr(line) != kSummaryHeader) row_error(path, row, "unexpected header");
  std::vector<SummaryRow> rows;
  while (std::getline(in, line)) {
    row += 1;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 14) {
      row_error(path, row, "expected 14 fields, got " + std::to_string(f.size()));
    }
    SummaryRow r;
    r.scenario = static_cast<int>(field_int(path, row, f[0]));
    r.strategy = static_cast<int>(field_int(path, row, f[1]));
    r.n_r = static_cast<int>(field_int(path, row, f[2]));
    r.n_s = static_cast<int>(field_int(path, row, f[3]));
    r.trials = static_cast<int>(field_int(path, row, f[4]));
    r.censored = static_cast<int>(field_int(path, row, f[5]));
    r.tau_mean_iter = field_num(path, row, f[6]);
    r.tau_std_iter = field_num(path, row, f[7]);
    r.tau_mean_s = field_num(path, row, f[8]);
    r.e = field_num(path, row, f[9]);
    r.q = field_num(path, row, f[10]);
    r.h = field_num(path, row, f[11]);
    r.efficiency_a = field_num(path, row, f[12]);
    r.efficiency_b = field_num(path, row, f[13]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<SeriesRow> read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open series CSV: " + path);
  std::string line;
  int row = 0;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  row += 1;
  if (strip_cr(line) != kSeriesHeader) row_error(path, row, "unexpected header");
  std::vector<SeriesRow> rows;
  while (std::getline(in, line)) {
    row += 1;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 7) {
      row_error(path, row, "expected 7 fields, got " + std::to_string(f.size()));
    }
    SeriesRow r;
    r.scenario = static_cast<int>(field_int(path, row, f[0]));
    r.strategy = static_cast<int>(field_int(path, row, f[1]));
    r.n_r = static_cast<int>(field_int(path, row, f[2]));
    r.n_s = static_cast<int>(field_int(path, row, f[3]));
    r.trial = static_cast<int>(field_int(path, row, f[4]));
    r.iteration = field_int(path, row, f[5]);
    r.retrieved = static_cast<int>(field_int(path, row, f[6]));
    rows.push_back(r);
  }
  return rows;
}

namespace {

const std::vector<std::string> kStrategyColors = {"#3b78b0", "#d99a2b", "#bf4a47"};
const std::vector<std::string> kComboColors = {
    "#3b78b0", "#d99a2b", "#bf4a47", "#58a066", "#8461b8", "#b05c8c",
    "#5aa0b8", "#a8883b", "#6b6b6b", "#445588", "#77aa44"};

std::string strategy_color(int strategy) {
  return kStrategyColors[static_cast<std::size_t>((strategy - 1) % 3)];
}

/// Sweep position: rescuer count for Scenario1, searcher count otherwise.
Scalar combo_axis_value(int scenario, int n_r, int n_s) {
  return scenario == 1 ? static_cast<Scalar>(n_r) : static_cast<Scalar>(n_s);
}

std::string combo_axis_label(int scenario) {
  return scenario == 1 ? "rescuers" : "searchers";
}

std::string combo_label(int n_r, int n_s) {
  return std::to_string(n_r) + "/" + std::to_string(n_s);
}

}  // namespace

std::vector<std::string> write_report_charts(const std::vector<SummaryRow>& summary,
                                             const std::vector<SeriesRow>& series,
                                             const std::string& out_dir) {
  if (!out_dir.empty() && out_dir != ".") std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  std::set<int> scenarios;
  for (const auto& r : summary) scenarios.insert(r.scenario);

  // Mean retrieved-over-time lines, one chart per (scenario, strategy).
  if (!series.empty()) {
    std::map<std::pair<int, int>,
             std::map<std::pair<int, int>, std::map<std::int64_t, std::pair<Scalar, int>>>>
        acc;
    for (const auto& r : series) {
      auto& cell = acc[{r.scenario, r.strategy}][{r.n_r, r.n_s}][r.iteration];
      cell.first += static_cast<Scalar>(r.retrieved);
      cell.second += 1;
    }
    for (const auto& [key, combos] : acc) {
      const auto [scenario, strategy] = key;
      std::vector<ChartSeries> chart;
      std::size_t color_i = 0;
      for (const auto& [combo, points] : combos) {
        ChartSeries s;
        s.label = combo_label(combo.first, combo.second);
        s.color = kComboColors[color_i++ % kComboColors.size()];
        for (const auto& [iter, cell] : points) {
          s.points.emplace_back(static_cast<Scalar>(iter), cell.first / cell.second);
        }
        chart.push_back(std::move(s));
      }
      const std::string path = out_dir + "/retrieved_scenario" + std::to_string(scenario) +
                               "_strategy" + std::to_string(strategy) + ".svg";
      write_text_file(path, line_chart("Mean retrieved targets, scenario " +
                                           std::to_string(scenario) + ", strategy " +
                                           std::to_string(strategy),
                                       "iteration", "retrieved targets", chart));
      written.push_back(path);
    }
  }

  for (int scenario : scenarios) {
    std::set<int> strategies;
    std::map<std::pair<int, int>, std::map<int, const SummaryRow*>> by_combo;
    for (const auto& r : summary) {
      if (r.scenario != scenario) continue;
      strategies.insert(r.strategy);
      by_combo[{r.n_r, r.n_s}][r.strategy] = &r;
    }
    std::vector<std::pair<int, int>> combos;
    for (const auto& [combo, rows] : by_combo) combos.push_back(combo);
    std::sort(combos.begin(), combos.end(), [&](const auto& a, const auto& b) {
      return combo_axis_value(scenario, a.first, a.second) <
             combo_axis_value(scenario, b.first, b.second);
    });

    std::vector<std::string> strategy_labels, strategy_palette;
    for (int s : strategies) {
      strategy_labels.push_back("strategy " + std::to_string(s));
      strategy_palette.push_back(strategy_color(s));
    }

    // Tau bars with std whiskers.
    std::vector<BarGroup> groups;
    for (const auto& combo : combos) {
      BarGroup g;
      g.label = combo_label(combo.first, combo.second);
      for (int s : strategies) {
        const auto it = by_combo[combo].find(s);
        g.values.push_back(it != by_combo[combo].end() ? it->second->tau_mean_iter : 0.0);
        g.whiskers.push_back(it != by_combo[combo].end() ? it->second->tau_std_iter : 0.0);
      }
      groups.push_back(std::move(g));
    }
    const std::string tau_path =
        out_dir + "/tau_bars_scenario" + std::to_string(scenario) + ".svg";
    write_text_file(tau_path,
                    bar_chart("Time constant, scenario " + std::to_string(scenario),
                              "team (rescuers/searchers)", "tau (iterations)",
                              strategy_labels, strategy_palette, groups));
    written.push_back(tau_path);

    // Heterogeneity and efficiency curves.
    auto curve_chart = [&](const std::string& stem, const std::string& title,
                           const std::string& y_label, auto value_of) {
      std::vector<ChartSeries> chart;
      std::size_t si = 0;
      for (int s : strategies) {
        ChartSeries cs;
        cs.label = strategy_labels[si];
        cs.color = strategy_palette[si];
        si += 1;
        for (const auto& combo : combos) {
          const auto it = by_combo[combo].find(s);
          if (it == by_combo[combo].end()) continue;
          cs.points.emplace_back(combo_axis_value(scenario, combo.first, combo.second),
                                 value_of(*it->second));
        }
        chart.push_back(std::move(cs));
      }
      const std::string path =
          out_dir + "/" + stem + "_scenario" + std::to_string(scenario) + ".svg";
      write_text_file(path, line_chart(title + ", scenario " + std::to_string(scenario),
                                       combo_axis_label(scenario), y_label, chart));
      written.push_back(path);
    };

    curve_chart("heterogeneity", "Heterogeneity measure", "H",
                [](const SummaryRow& r) { return r.h; });
    curve_chart("efficiency_a", "Efficiency, first cost setting", "efficiency",
                [](const SummaryRow& r) { return r.efficiency_a; });
    curve_chart("efficiency_b", "Efficiency, second cost setting", "efficiency",
                [](const SummaryRow& r) { return r.efficiency_b; });
  }
  return written;
}

}  // namespace sarsim
