#include "ailc/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ailc/errors.hpp"

namespace ailc {

namespace {

constexpr double kLogFloor = 1e-16;  // zeros are clamped here before log scaling

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Panel {
  double x0, y0, w, h;  // plot area in canvas coordinates
  std::string title;
};

// One polyline per series; y is log10 of the per-iteration peak.
void render_panel(std::string& svg, const Panel& panel, const std::vector<PlotSeries>& series,
                  bool tracking) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  int max_k = 1;
  for (const PlotSeries& s : series) {
    max_k = std::max(max_k, static_cast<int>(s.report->iterations.size()));
    for (const IterationRecord& rec : s.report->iterations) {
      const double v = std::log10(
          std::max(kLogFloor, tracking ? rec.max_track_err : rec.max_ident_err));
      if (first) {
        lo = hi = v;
        first = false;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  }
  lo = std::floor(lo);
  hi = std::ceil(hi);
  if (hi <= lo) hi = lo + 1.0;

  const auto to_x = [&](double k) {
    return panel.x0 + (max_k == 1 ? 0.5 : (k - 1.0) / (max_k - 1.0)) * panel.w;
  };
  const auto to_y = [&](double logv) {
    return panel.y0 + panel.h - (logv - lo) / (hi - lo) * panel.h;
  };

  svg += "<text x=\"" + num(panel.x0 + panel.w / 2) + "\" y=\"" + num(panel.y0 - 10) +
         "\" text-anchor=\"middle\" font-size=\"13\" font-weight=\"bold\">" + panel.title +
         "</text>\n";
  svg += "<rect x=\"" + num(panel.x0) + "\" y=\"" + num(panel.y0) + "\" width=\"" +
         num(panel.w) + "\" height=\"" + num(panel.h) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";

  const int decades = static_cast<int>(hi - lo);
  const int step = std::max(1, (decades + 7) / 8);
  for (int d = 0; d <= decades; d += step) {
    const double y = to_y(lo + d);
    svg += "<line x1=\"" + num(panel.x0) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(panel.x0 + panel.w) + "\" y2=\"" + num(y) +
           "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    char label[32];
    std::snprintf(label, sizeof(label), "1e%d", static_cast<int>(lo) + d);
    svg += "<text x=\"" + num(panel.x0 - 6) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\" font-size=\"11\">" + label + "</text>\n";
  }

  for (int i = 0; i < 5; ++i) {
    const int k = max_k == 1 ? 1 : 1 + static_cast<int>(std::lround(i * (max_k - 1) / 4.0));
    const double x = to_x(k);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(panel.y0 + panel.h) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(panel.y0 + panel.h + 4) + "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(panel.y0 + panel.h + 18) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + std::to_string(k) + "</text>\n";
  }
  svg += "<text x=\"" + num(panel.x0 + panel.w / 2) + "\" y=\"" +
         num(panel.y0 + panel.h + 34) +
         "\" text-anchor=\"middle\" font-size=\"12\">iteration k</text>\n";
  svg += "<text x=\"" + num(panel.x0 - 44) + "\" y=\"" + num(panel.y0 + panel.h / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " +
         num(panel.x0 - 44) + " " + num(panel.y0 + panel.h / 2) +
         ")\">peak |error| (log scale)</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    std::string points;
    const auto& iterations = series[s].report->iterations;
    for (std::size_t k = 0; k < iterations.size(); ++k) {
      const double v = tracking ? iterations[k].max_track_err : iterations[k].max_ident_err;
      points += num(to_x(static_cast<double>(k + 1))) + "," +
                num(to_y(std::log10(std::max(kLogFloor, v)))) + " ";
    }
    if (!points.empty()) points.pop_back();
    svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" +
           kPalette[s % 6] + "\" stroke-width=\"1.5\"/>\n";
  }
}

}  // namespace

std::string convergence_svg(const std::vector<PlotSeries>& series) {
  if (series.empty()) throw ContractViolation("convergence_svg needs at least one report");
  for (const PlotSeries& s : series)
    if (s.report == nullptr || s.report->iterations.empty())
      throw ContractViolation("convergence_svg received an empty report");

  const double width = 960, height = 440;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                    "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                    num(height) + "\" font-family=\"sans-serif\">\n";
  svg += "<rect width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";

  if (series.size() > 1) {
    double x = 70.0;
    for (std::size_t s = 0; s < series.size(); ++s) {
      svg += "<line x1=\"" + num(x) + "\" y1=\"16\" x2=\"" + num(x + 22) +
             "\" y2=\"16\" stroke=\"" + kPalette[s % 6] + "\" stroke-width=\"2\"/>\n";
      svg += "<text x=\"" + num(x + 28) + "\" y=\"20\" font-size=\"12\">" + series[s].label +
             "</text>\n";
      x += 36.0 + 7.0 * static_cast<double>(series[s].label.size());
    }
  }

  render_panel(svg, Panel{70, 70, 360, 290, "Peak tracking error"}, series, true);
  render_panel(svg, Panel{560, 70, 360, 290, "Peak identification error"}, series, false);
  svg += "</svg>\n";
  return svg;
}

}  // namespace ailc
