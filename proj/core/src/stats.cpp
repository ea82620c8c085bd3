#include "actime/stats.hpp"

#include <cmath>
#include <cstddef>

#include "fft.hpp"

namespace actime {

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> centered(const TimeSeries& series) {
  const double m = mean(series);
  std::vector<double> x(series.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = series[i] - m;
  return x;
}

} // namespace

double mean(const TimeSeries& series) {
  double sum = 0.0;
  for (double v : series) sum += v;
  return sum / static_cast<double>(series.size());
}

double variance(const TimeSeries& series) {
  const std::size_t n = series.size();
  if (n < 2)
    throw DegenerateSeries("variance needs at least two observations");
  const double m = mean(series);
  double ss = 0.0;
  for (double v : series) {
    const double d = v - m;
    ss += d * d;
  }
  return ss / static_cast<double>(n);
}

bool is_constant(const TimeSeries& series) noexcept {
  for (double v : series)
    if (v != series[0]) return false;
  return true;
}

namespace detail {

std::vector<double> autocovariance_direct(const std::vector<double>& x, std::size_t max_lag) {
  const std::size_t n = x.size();
  std::vector<double> c(max_lag + 1, 0.0);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) sum += x[i] * x[i + k];
    c[k] = sum / static_cast<double>(n);
  }
  return c;
}

std::vector<double> autocovariance_fft(const std::vector<double>& x, std::size_t max_lag) {
  const std::size_t n = x.size();
  // Pad to at least n + max_lag so circular correlation matches the linear sums.
  const std::size_t padded = next_pow2(n + max_lag);
  std::vector<double> buf(padded, 0.0);
  std::copy(x.begin(), x.end(), buf.begin());
  auto spec = fft_r2c(buf);
  for (auto& z : spec) z = std::norm(z);
  auto corr = fft_c2r(spec, padded); // corr[k] = padded * sum_i x_i x_{i+k}
  std::vector<double> c(max_lag + 1);
  const double scale = 1.0 / (static_cast<double>(padded) * static_cast<double>(n));
  for (std::size_t k = 0; k <= max_lag; ++k) c[k] = corr[k] * scale;
  return c;
}

} // namespace detail

AcfVector sample_acf(const TimeSeries& series, std::size_t max_lag) {
  const std::size_t n = series.size();
  if (n < 2)
    throw DegenerateSeries("autocorrelation needs at least two observations");
  if (max_lag > n - 1)
    throw BadLength("max_lag " + std::to_string(max_lag) + " exceeds n - 1");

  if (is_constant(series))
    throw DegenerateSeries("constant series, autocorrelation undefined");

  const auto x = centered(series);
  const auto c = (n > 1024) ? detail::autocovariance_fft(x, max_lag)
                            : detail::autocovariance_direct(x, max_lag);
  if (!(c[0] > 0.0))
    throw DegenerateSeries("zero sample variance, autocorrelation undefined");

  AcfVector acf;
  acf.n = n;
  acf.s2 = c[0];
  acf.rho.resize(max_lag + 1);
  acf.rho[0] = 1.0;
  for (std::size_t k = 1; k <= max_lag; ++k) acf.rho[k] = c[k] / c[0];
  return acf;
}

} // namespace actime
