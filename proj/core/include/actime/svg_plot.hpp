#ifndef ACTIME_SVG_PLOT_HPP
#define ACTIME_SVG_PLOT_HPP

#include <filesystem>

#include "actime/sweep.hpp"

namespace actime {

/// Render sweep results as a single SVG: one log-log panel per series
/// (element <g class="panel">), one polyline per method connecting the
/// per-length medians over seeds, with gaps where every seed failed, and
/// a dashed horizontal line at the reference tau. Interval rows
/// additionally get vertical error bars.
void emit_plot(const SweepResult& result, const std::filesystem::path& path);

} // namespace actime

#endif // ACTIME_SVG_PLOT_HPP
