#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sarsim/types.hpp"

namespace sarsim {

struct SummaryRow {
  int scenario = 0;
  int strategy = 0;
  int n_r = 0;
  int n_s = 0;
  int trials = 0;
  int censored = 0;
  Scalar tau_mean_iter = 0.0;
  Scalar tau_std_iter = 0.0;
  Scalar tau_mean_s = 0.0;
  Scalar e = 0.0;
  Scalar q = 0.0;
  Scalar h = 0.0;
  Scalar efficiency_a = 0.0;
  Scalar efficiency_b = 0.0;
};

struct SeriesRow {
  int scenario = 0;
  int strategy = 0;
  int n_r = 0;
  int n_s = 0;
  int trial = 0;
  std::int64_t iteration = 0;
  int retrieved = 0;
};

/// Strict readers for the harness CSV schemas. Malformed input raises a
/// runtime error naming the file and 1-based row.
std::vector<SummaryRow> read_summary_csv(const std::string& path);
std::vector<SeriesRow> read_series_csv(const std::string& path);

/// Renders the report charts into out_dir and returns the written paths:
/// mean retrieved-vs-iteration lines per scenario/strategy (when series
/// rows are given), tau bar charts with std whiskers, heterogeneity curves,
/// and one efficiency curve chart per cost setting.
std::vector<std::string> write_report_charts(const std::vector<SummaryRow>& summary,
                                             const std::vector<SeriesRow>& series,
                                             const std::string& out_dir);

}  // namespace sarsim
