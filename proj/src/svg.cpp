#include "sarsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sarsim {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string px(Scalar v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string num(Scalar v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

/// Step size of roughly range/target_ticks rounded to 1/2/5 * 10^k.
Scalar nice_step(Scalar range, int target_ticks) {
  if (!(range > 0.0)) return 1.0;
  const Scalar raw = range / std::max(1, target_ticks);
  const Scalar mag = std::pow(10.0, std::floor(std::log10(raw)));
  const Scalar norm = raw / mag;
  Scalar step = 10.0;
  if (norm <= 1.0) step = 1.0;
  else if (norm <= 2.0) step = 2.0;
  else if (norm <= 5.0) step = 5.0;
  return step * mag;
}

struct Frame {
  Scalar width = 960.0;
  Scalar height = 580.0;
  Scalar left = 80.0;
  Scalar right = 40.0;
  Scalar top = 56.0;
  Scalar bottom = 64.0;

  Scalar plot_w() const { return width - left - right; }
  Scalar plot_h() const { return height - top - bottom; }
};

void open_document(std::ostringstream& out, const Frame& f, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(f.width) << "\" height=\""
      << px(f.height) << "\" viewBox=\"0 0 " << px(f.width) << ' ' << px(f.height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out << "<text x=\"" << px(f.width / 2) << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"17\" fill=\"#1c1c1c\">"
      << escape(title) << "</text>\n";
}

void draw_axes(std::ostringstream& out, const Frame& f, const std::string& x_label,
               const std::string& y_label) {
  out << "<line x1=\"" << px(f.left) << "\" y1=\"" << px(f.height - f.bottom) << "\" x2=\""
      << px(f.width - f.right) << "\" y2=\"" << px(f.height - f.bottom)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << px(f.left) << "\" y1=\"" << px(f.top) << "\" x2=\"" << px(f.left)
      << "\" y2=\"" << px(f.height - f.bottom)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << px(f.left + f.plot_w() / 2) << "\" y=\"" << px(f.height - 16)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "fill=\"#1c1c1c\">"
      << escape(x_label) << "</text>\n";
  out << "<text x=\"22\" y=\"" << px(f.top + f.plot_h() / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "fill=\"#1c1c1c\" transform=\"rotate(-90 22 "
      << px(f.top + f.plot_h() / 2) << ")\">" << escape(y_label) << "</text>\n";
}

void draw_y_ticks(std::ostringstream& out, const Frame& f, Scalar y_min, Scalar y_max) {
  const Scalar step = nice_step(y_max - y_min, 6);
  const Scalar first = std::ceil(y_min / step) * step;
  for (Scalar v = first; v <= y_max + step * 1e-9; v += step) {
    const Scalar y = f.height - f.bottom - (v - y_min) / (y_max - y_min) * f.plot_h();
    out << "<line x1=\"" << px(f.left - 4) << "\" y1=\"" << px(y) << "\" x2=\""
        << px(f.width - f.right) << "\" y2=\"" << px(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << px(f.left - 8) << "\" y=\"" << px(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#444444\">"
        << num(v) << "</text>\n";
  }
}

void draw_x_ticks(std::ostringstream& out, const Frame& f, Scalar x_min, Scalar x_max) {
  const Scalar step = nice_step(x_max - x_min, 8);
  const Scalar first = std::ceil(x_min / step) * step;
  for (Scalar v = first; v <= x_max + step * 1e-9; v += step) {
    const Scalar x = f.left + (v - x_min) / (x_max - x_min) * f.plot_w();
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(f.height - f.bottom) << "\" x2=\""
        << px(x) << "\" y2=\"" << px(f.height - f.bottom + 4)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << px(x) << "\" y=\"" << px(f.height - f.bottom + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#444444\">"
        << num(v) << "</text>\n";
  }
}

void draw_legend(std::ostringstream& out, const Frame& f,
                 const std::vector<std::string>& labels,
                 const std::vector<std::string>& colors) {
  Scalar x = f.left + 10;
  const Scalar y = f.top + 14;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << "<rect x=\"" << px(x) << "\" y=\"" << px(y - 9) << "\" width=\"12\" height=\"12\" "
        << "fill=\"" << colors[i % colors.size()] << "\"/>\n";
    out << "<text x=\"" << px(x + 16) << "\" y=\"" << px(y + 2)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1c1c1c\">"
        << escape(labels[i]) << "</text>\n";
    x += 16.0 + 7.2 * static_cast<Scalar>(labels[i].size()) + 18.0;
  }
}

}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<ChartSeries>& series) {
  Frame f;
  Scalar x_min = std::numeric_limits<Scalar>::infinity(), x_max = -x_min;
  Scalar y_min = std::numeric_limits<Scalar>::infinity(), y_max = -y_min;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!std::isfinite(x_min)) {
    x_min = 0.0;
    x_max = 1.0;
    y_min = 0.0;
    y_max = 1.0;
  }
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;
  const Scalar y_pad = (y_max - y_min) * 0.05;
  y_min = y_min >= 0.0 ? 0.0 : y_min - y_pad;
  y_max += y_pad;

  std::ostringstream out;
  open_document(out, f, title);
  draw_y_ticks(out, f, y_min, y_max);
  draw_x_ticks(out, f, x_min, x_max);
  draw_axes(out, f, x_label, y_label);

  for (const auto& s : series) {
    if (s.points.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.8\" points=\"";
    for (const auto& [x, y] : s.points) {
      const Scalar sx = f.left + (x - x_min) / (x_max - x_min) * f.plot_w();
      const Scalar sy = f.height - f.bottom - (y - y_min) / (y_max - y_min) * f.plot_h();
      out << px(sx) << ',' << px(sy) << ' ';
    }
    out << "\"/>\n";
  }

  std::vector<std::string> labels, colors;
  for (const auto& s : series) {
    labels.push_back(s.label);
    colors.push_back(s.color);
  }
  if (labels.size() <= 8) draw_legend(out, f, labels, colors);
  out << "</svg>\n";
  return out.str();
}

std::string bar_chart(const std::string& title, const std::string& x_label,
                      const std::string& y_label,
                      const std::vector<std::string>& series_labels,
                      const std::vector<std::string>& series_colors,
                      const std::vector<BarGroup>& groups) {
  Frame f;
  const std::size_t n_series = series_labels.size();
  Scalar y_max = 0.0;
  for (const auto& g : groups) {
    if (g.values.size() != n_series) {
      throw std::invalid_argument("bar group '" + g.label + "' has wrong series count");
    }
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      const Scalar w = i < g.whiskers.size() ? g.whiskers[i] : 0.0;
      y_max = std::max(y_max, g.values[i] + w);
    }
  }
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.08;

  std::ostringstream out;
  open_document(out, f, title);
  draw_y_ticks(out, f, 0.0, y_max);
  draw_axes(out, f, x_label, y_label);

  const Scalar group_w = f.plot_w() / std::max<std::size_t>(1, groups.size());
  const Scalar bar_w = group_w * 0.8 / std::max<std::size_t>(1, n_series);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    const Scalar gx = f.left + group_w * static_cast<Scalar>(gi) + group_w * 0.1;
    for (std::size_t si = 0; si < n_series; ++si) {
      const Scalar v = g.values[si];
      const Scalar h = v / y_max * f.plot_h();
      const Scalar x = gx + bar_w * static_cast<Scalar>(si);
      const Scalar y = f.height - f.bottom - h;
      out << "<rect x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\"" << px(bar_w * 0.92)
          << "\" height=\"" << px(h) << "\" fill=\"" << series_colors[si % series_colors.size()]
          << "\"/>\n";
      const Scalar wk = si < g.whiskers.size() ? g.whiskers[si] : 0.0;
      if (wk > 0.0) {
        const Scalar cx = x + bar_w * 0.46;
        const Scalar y_lo = f.height - f.bottom - std::max(0.0, v - wk) / y_max * f.plot_h();
        const Scalar y_hi = f.height - f.bottom - std::min(y_max, v + wk) / y_max * f.plot_h();
        out << "<line x1=\"" << px(cx) << "\" y1=\"" << px(y_lo) << "\" x2=\"" << px(cx)
            << "\" y2=\"" << px(y_hi) << "\" stroke=\"#222222\" stroke-width=\"1.2\"/>\n";
        out << "<line x1=\"" << px(cx - 4) << "\" y1=\"" << px(y_hi) << "\" x2=\""
            << px(cx + 4) << "\" y2=\"" << px(y_hi)
            << "\" stroke=\"#222222\" stroke-width=\"1.2\"/>\n";
        out << "<line x1=\"" << px(cx - 4) << "\" y1=\"" << px(y_lo) << "\" x2=\""
            << px(cx + 4) << "\" y2=\"" << px(y_lo)
            << "\" stroke=\"#222222\" stroke-width=\"1.2\"/>\n";
      }
    }
    out << "<text x=\"" << px(gx + bar_w * static_cast<Scalar>(n_series) / 2) << "\" y=\""
        << px(f.height - f.bottom + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#444444\">"
        << escape(g.label) << "</text>\n";
  }
  draw_legend(out, f, series_labels, series_colors);
  out << "</svg>\n";
  return out.str();
}

std::string world_snapshot(const World& world, const std::vector<SensorReading>& readings,
                           const std::vector<ControlOutput>& controls) {
  (void)readings;
  const Scalar margin = 24.0;
  const Scalar scale = 600.0 / std::max(world.arena.x, world.arena.y);
  const Scalar w = world.arena.x * scale + 2 * margin;
  const Scalar h = world.arena.y * scale + 2 * margin;
  auto X = [&](Scalar wx) { return margin + wx * scale; };
  // World y grows upward; SVG y grows downward.
  auto Y = [&](Scalar wy) { return h - margin - wy * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w) << "\" height=\""
      << px(h) << "\" viewBox=\"0 0 " << px(w) << ' ' << px(h) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#10141a\"/>\n";
  out << "<rect x=\"" << px(X(0)) << "\" y=\"" << px(Y(world.arena.y)) << "\" width=\""
      << px(world.arena.x * scale) << "\" height=\"" << px(world.arena.y * scale)
      << "\" fill=\"#161c24\" stroke=\"#5c6773\" stroke-width=\"1.5\"/>\n";

  for (const auto& sq : world.arena.collection_points) {
    out << "<rect x=\"" << px(X(sq.center.x() - sq.half_side)) << "\" y=\""
        << px(Y(sq.center.y() + sq.half_side)) << "\" width=\"" << px(2 * sq.half_side * scale)
        << "\" height=\"" << px(2 * sq.half_side * scale)
        << "\" fill=\"#1d4a2f\" stroke=\"#3fa66a\" stroke-width=\"1.5\"/>\n";
  }

  for (const auto& t : world.targets) {
    if (!t.alive) continue;
    out << "<circle cx=\"" << px(X(t.position.x())) << "\" cy=\"" << px(Y(t.position.y()))
        << "\" r=\"2\" fill=\"#e8c547\"/>\n";
  }

  for (std::size_t i = 0; i < world.agents.size(); ++i) {
    const auto& a = world.agents[i];
    if (i < controls.size()) {
      const Vec2& v = controls[i].velocity;
      const Scalar vn = v.norm();
      if (vn > 0.0) {
        const char* ray_color = "#e8e8e8";
        switch (controls[i].new_state) {
          case AgentMode::LongRangeApproach: ray_color = "#e05252"; break;
          case AgentMode::BeaconApproach: ray_color = "#4ddb7c"; break;
          default: break;
        }
        const Vec2 tip = a.position + v / vn * 3.0;
        out << "<line x1=\"" << px(X(a.position.x())) << "\" y1=\"" << px(Y(a.position.y()))
            << "\" x2=\"" << px(X(tip.x())) << "\" y2=\"" << px(Y(tip.y())) << "\" stroke=\""
            << ray_color << "\" stroke-width=\"1.4\"/>\n";
      }
    }
    const char* fill = a.kind == AgentKind::Searcher ? "#c95bd4" : "#e0483e";
    const char* stroke = a.carrying.has_value() ? "#ffffff" : "#00000000";
    out << "<circle cx=\"" << px(X(a.position.x())) << "\" cy=\"" << px(Y(a.position.y()))
        << "\" r=\"3.4\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1.3\"/>\n";
  }

  out << "<text x=\"" << px(margin) << "\" y=\"16\" font-family=\"sans-serif\" "
         "font-size=\"12\" fill=\"#c8d0d8\">iteration "
      << world.iteration << ", retrieved " << world.retrieved << "/" << world.arena.n_t
      << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sarsim
