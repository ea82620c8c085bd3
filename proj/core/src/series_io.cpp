#include "actime/series_io.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "format.hpp"

namespace actime {

TimeSeries load_series(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path.string());
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Trim trailing CR from files written on other platforms.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v = 0.0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": not a number: " + line);
    values.push_back(v);
  }
  if (values.empty())
    throw IoError(path.string() + ": no values");
  return TimeSeries(std::move(values), path.stem().string());
}

void save_series(const TimeSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  for (double v : series) out << detail::format_double(v) << '\n';
  if (!out)
    throw IoError("write failed for " + path.string());
}

void save_series_csv(const TimeSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << "index,value\n";
  for (std::size_t i = 0; i < series.size(); ++i)
    out << i << ',' << detail::format_double(series[i]) << '\n';
  if (!out)
    throw IoError("write failed for " + path.string());
}

void save_metadata(const TimeSeries& series, const std::filesystem::path& path) {
  nlohmann::json meta;
  if (!series.label().empty()) meta["label"] = series.label();
  if (series.seed()) meta["seed"] = *series.seed();
  meta["n"] = series.size();
  for (const auto& [key, value] : series.meta()) meta[key] = value;

  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << meta.dump(2) << '\n';
  if (!out)
    throw IoError("write failed for " + path.string());
}

} // namespace actime
