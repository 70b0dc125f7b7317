#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sarsim/behavior.hpp"
#include "sarsim/sensors.hpp"
#include "sarsim/types.hpp"

namespace sarsim {

struct ChartSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<Scalar, Scalar>> points;
};

/// Multi-series line chart as a standalone SVG 1.1 document.
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<ChartSeries>& series);

/// One x-axis group of a grouped bar chart: one value (and optional whisker
/// half-length) per series.
struct BarGroup {
  std::string label;
  std::vector<Scalar> values;
  std::vector<Scalar> whiskers;
};

std::string bar_chart(const std::string& title, const std::string& x_label,
                      const std::string& y_label,
                      const std::vector<std::string>& series_labels,
                      const std::vector<std::string>& series_colors,
                      const std::vector<BarGroup>& groups);

/// Schematic top-down view of the world: collection squares, targets,
/// agents colored by kind, and a heading ray per moving agent colored by
/// its mode (long-range red, beacon green, walk/retrieval white). Readings
/// and controls may be empty (freshly built world, no rays).
std::string world_snapshot(const World& world, const std::vector<SensorReading>& readings,
                           const std::vector<ControlOutput>& controls);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sarsim
