#include "actime/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "format.hpp"

namespace actime {

namespace {

constexpr double kPanelW = 360.0;
constexpr double kPanelH = 240.0;
constexpr double kMarginL = 56.0;
constexpr double kMarginR = 14.0;
constexpr double kMarginT = 30.0;
constexpr double kMarginB = 40.0;
constexpr int kColumns = 2;

const char* method_color(Method m) {
  switch (m) {
    case Method::BatchMeans: return "#1b6ca8";
    case Method::SpectrumFit: return "#c44536";
    case Method::Ips: return "#7a6c5d";
    case Method::Ims: return "#9c89b8";
    case Method::Ics: return "#2e8540";
    case Method::ArProcess: return "#e08700";
  }
  return "#000000";
}

struct Panel {
  SeriesKind kind;
  // method -> length -> taus over seeds (empty vector means all failed)
  std::map<Method, std::map<std::size_t, std::vector<double>>> cells;
  std::map<Method, std::map<std::size_t, std::vector<std::pair<double, double>>>> bars;
};

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

} // namespace

void emit_plot(const SweepResult& result, const std::filesystem::path& path) {
  if (result.rows.empty())
    throw ConfigError("nothing to plot: empty sweep result");

  // Group rows into panels, preserving first-appearance order of series.
  std::vector<Panel> panels;
  std::map<SeriesKind, std::size_t> panel_index;
  double len_lo = 1e300, len_hi = 0.0, tau_lo = 1e300, tau_hi = 0.0;
  for (const auto& row : result.rows) {
    if (!panel_index.count(row.series)) {
      panel_index[row.series] = panels.size();
      panels.push_back(Panel{row.series, {}, {}});
    }
    Panel& panel = panels[panel_index[row.series]];
    auto& cell = panel.cells[row.method][row.length];
    len_lo = std::min(len_lo, static_cast<double>(row.length));
    len_hi = std::max(len_hi, static_cast<double>(row.length));
    if (row.tau && *row.tau > 0.0) {
      cell.push_back(*row.tau);
      tau_lo = std::min(tau_lo, *row.tau);
      tau_hi = std::max(tau_hi, *row.tau);
    }
    if (row.lower && row.upper && *row.lower > 0.0) {
      panel.bars[row.method][row.length].emplace_back(*row.lower, *row.upper);
      tau_lo = std::min(tau_lo, *row.lower);
      tau_hi = std::max(tau_hi, *row.upper);
    }
  }
  for (const auto& [kind, rec] : result.truth) {
    tau_lo = std::min(tau_lo, rec.tau_true);
    tau_hi = std::max(tau_hi, rec.tau_true);
  }
  if (!(tau_lo < tau_hi)) {
    tau_lo = tau_lo > 0.0 && tau_lo < 1e300 ? tau_lo * 0.5 : 0.1;
    tau_hi = tau_lo * 100.0;
  }
  tau_lo *= 0.5;
  tau_hi *= 2.0;
  if (!(len_lo < len_hi)) len_hi = len_lo * 10.0;

  const int columns = std::min<int>(kColumns, static_cast<int>(panels.size()));
  const int rows_count = (static_cast<int>(panels.size()) + columns - 1) / columns;
  const double width = columns * kPanelW;
  const double height = rows_count * kPanelH + 24.0; // legend strip

  const double lx0 = std::log10(len_lo), lx1 = std::log10(len_hi);
  const double ly0 = std::log10(tau_lo), ly1 = std::log10(tau_hi);

  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t pi = 0; pi < panels.size(); ++pi) {
    const Panel& panel = panels[pi];
    const std::size_t grid_col = pi % static_cast<std::size_t>(columns);
    const std::size_t grid_row = pi / static_cast<std::size_t>(columns);
    const double ox = static_cast<double>(grid_col) * kPanelW;
    const double oy = static_cast<double>(grid_row) * kPanelH;
    const double px0 = ox + kMarginL, px1 = ox + kPanelW - kMarginR;
    const double py0 = oy + kPanelH - kMarginB, py1 = oy + kMarginT;

    const auto sx = [&](double length) {
      return px0 + (std::log10(length) - lx0) / (lx1 - lx0) * (px1 - px0);
    };
    const auto sy = [&](double tau) {
      return py0 + (std::log10(tau) - ly0) / (ly1 - ly0) * (py1 - py0);
    };

    out << "<g class=\"panel\">\n";
    out << "<rect x=\"" << px0 << "\" y=\"" << py1 << "\" width=\"" << (px1 - px0)
        << "\" height=\"" << (py0 - py1)
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << (px0 + 4) << "\" y=\"" << (py1 - 6) << "\">"
        << to_string(panel.kind) << "</text>\n";

    // Decade ticks.
    for (int d = static_cast<int>(std::ceil(lx0)); d <= static_cast<int>(std::floor(lx1)); ++d) {
      const double x = sx(std::pow(10.0, d));
      out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(py0) << "\" x2=\"" << fmt(x)
          << "\" y2=\"" << fmt(py0 + 4) << "\" stroke=\"#888\"/>\n";
      out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(py0 + 16)
          << "\" text-anchor=\"middle\">1e" << d << "</text>\n";
    }
    for (int d = static_cast<int>(std::ceil(ly0)); d <= static_cast<int>(std::floor(ly1)); ++d) {
      const double y = sy(std::pow(10.0, d));
      out << "<line x1=\"" << fmt(px0 - 4) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(px0)
          << "\" y2=\"" << fmt(y) << "\" stroke=\"#888\"/>\n";
      out << "<text x=\"" << fmt(px0 - 6) << "\" y=\"" << fmt(y + 4)
          << "\" text-anchor=\"end\">1e" << d << "</text>\n";
    }

    // Reference tau.
    const auto truth_it = result.truth.find(panel.kind);
    if (truth_it != result.truth.end()) {
      const double y = sy(truth_it->second.tau_true);
      out << "<line x1=\"" << fmt(px0) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(px1)
          << "\" y2=\"" << fmt(y)
          << "\" stroke=\"#444\" stroke-dasharray=\"6,4\" stroke-width=\"1\"/>\n";
    }

    for (const auto& [method, by_length] : panel.cells) {
      // Median polyline, broken wherever a length has no successful seed.
      std::vector<std::string> segments;
      std::string current;
      for (const auto& [length, taus] : by_length) {
        if (taus.empty()) {
          if (!current.empty()) segments.push_back(std::move(current));
          current.clear();
          continue;
        }
        const double x = sx(static_cast<double>(length));
        const double y = sy(median_of(taus));
        current += fmt(x) + "," + fmt(y) + " ";
        // Individual estimates as dots.
        for (double tau : taus)
          out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(sy(tau))
              << "\" r=\"1.6\" fill=\"" << method_color(method) << "\" fill-opacity=\"0.5\"/>\n";
      }
      if (!current.empty()) segments.push_back(std::move(current));
      for (const auto& seg : segments)
        out << "<polyline points=\"" << seg << "\" fill=\"none\" stroke=\""
            << method_color(method) << "\" stroke-width=\"1.4\"/>\n";

      const auto bars_it = panel.bars.find(method);
      if (bars_it != panel.bars.end()) {
        for (const auto& [length, intervals] : bars_it->second) {
          const double x = sx(static_cast<double>(length));
          for (const auto& [lo, hi] : intervals)
            out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(sy(lo)) << "\" x2=\""
                << fmt(x) << "\" y2=\"" << fmt(sy(hi)) << "\" stroke=\""
                << method_color(method) << "\" stroke-width=\"1\" stroke-opacity=\"0.6\"/>\n";
        }
      }
    }
    out << "</g>\n";
  }

  // Legend strip along the bottom.
  std::vector<Method> seen;
  for (const auto& panel : panels)
    for (const auto& [method, cells] : panel.cells)
      if (std::find(seen.begin(), seen.end(), method) == seen.end()) seen.push_back(method);
  double lx = 10.0;
  const double ly = height - 8.0;
  for (Method m : seen) {
    out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
        << fmt(lx + 22) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << method_color(m)
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt(lx + 27) << "\" y=\"" << fmt(ly) << "\">" << to_string(m)
        << "</text>\n";
    lx += 130.0;
  }

  out << "</svg>\n";
  if (!out)
    throw IoError("write failed for " + path.string());
}

} // namespace actime
