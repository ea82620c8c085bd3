#ifndef ACTIME_STATS_HPP
#define ACTIME_STATS_HPP

#include <cstddef>
#include <vector>

#include "actime/time_series.hpp"

namespace actime {

/// Sample autocorrelations rho[0..K] at unit lags.
///
/// rho[0] == 1 and |rho[k]| <= 1 for all k: the 1/n-normalized
/// autocovariance sequence s2 * rho is positive semi-definite, which keeps
/// Yule-Walker systems solvable downstream.
struct AcfVector {
  std::vector<double> rho; // indexed by lag, rho[0] == 1
  std::size_t n = 0;       // length of the source series
  double s2 = 0.0;         // 1/n sample variance used as normalizer

  std::size_t max_lag() const noexcept { return rho.empty() ? 0 : rho.size() - 1; }
};

double mean(const TimeSeries& series);

/// 1/n-normalized sample variance (see AcfVector). Throws DegenerateSeries
/// if fewer than two observations.
double variance(const TimeSeries& series);

/// True when every value is identical. Estimators use this instead of
/// `variance == 0`: for a constant that is not exactly representable
/// (4.2, say) the accumulated rounding of the mean makes the computed
/// variance a tiny positive number rather than zero.
bool is_constant(const TimeSeries& series) noexcept;

/// rho_k = sum_{i=1}^{n-k} (X_i - m)(X_{i+k} - m) / (n * s2) for k = 0..max_lag.
///
/// Uses FFT convolution for n > 1024 and the direct O(n*K) sum otherwise;
/// the two agree to ~1e-12 absolute. Throws DegenerateSeries when s2 == 0.
AcfVector sample_acf(const TimeSeries& series, std::size_t max_lag);

namespace detail {
// Exposed for the FFT-vs-direct equivalence tests.
std::vector<double> autocovariance_direct(const std::vector<double>& x, std::size_t max_lag);
std::vector<double> autocovariance_fft(const std::vector<double>& x, std::size_t max_lag);
} // namespace detail

} // namespace actime

#endif // ACTIME_STATS_HPP
