#ifndef ACTIME_SERIES_IO_HPP
#define ACTIME_SERIES_IO_HPP

#include <filesystem>

#include "actime/time_series.hpp"

namespace actime {

/// One decimal float per line, nothing else. Values are written in
/// shortest round-trip form, so save/load is lossless.
TimeSeries load_series(const std::filesystem::path& path);
void save_series(const TimeSeries& series, const std::filesystem::path& path);

/// CSV with header `index,value`.
void save_series_csv(const TimeSeries& series, const std::filesystem::path& path);

/// Sidecar metadata (label, seed, generator parameters, diagnostics) as a
/// flat JSON object next to the series file.
void save_metadata(const TimeSeries& series, const std::filesystem::path& path);

} // namespace actime

#endif // ACTIME_SERIES_IO_HPP
