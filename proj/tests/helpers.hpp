#ifndef ACTIME_TESTS_HELPERS_HPP
#define ACTIME_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "actime/rng.hpp"
#include "actime/time_series.hpp"

namespace actime::testing {

inline TimeSeries iid_normal(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (auto& v : x) v = rng.normal();
  return TimeSeries(std::move(x), "iid", seed);
}

inline TimeSeries alternating(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (i % 2 == 0) ? 1.0 : -1.0;
  return TimeSeries(std::move(x), "alternating");
}

inline TimeSeries affine(const TimeSeries& series, double a, double b) {
  std::vector<double> x(series.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = a * series[i] + b;
  return TimeSeries(std::move(x), series.label());
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

} // namespace actime::testing

#endif // ACTIME_TESTS_HELPERS_HPP
