#ifndef ACTIME_BATCH_MEANS_HPP
#define ACTIME_BATCH_MEANS_HPP

#include <cstddef>
#include <optional>

#include "actime/estimate.hpp"
#include "actime/time_series.hpp"

namespace actime {

/// Partition of a series into num_batches disjoint batches of size
/// batch_size; trailing elements beyond num_batches * batch_size are
/// dropped from all statistics.
struct BatchPlan {
  std::size_t batch_size = 1;
  std::size_t num_batches = 2;

  /// batch_size = floor(n^(2/3)), num_batches = floor(n / batch_size);
  /// the batch size takes precedence and the count is derived.
  /// Throws TooShort for n < 8.
  static BatchPlan for_length(std::size_t n);

  /// Explicit batch size, count derived. Throws TooShort if fewer than
  /// two batches fit.
  static BatchPlan with_batch_size(std::size_t n, std::size_t batch_size);
};

/// tau = m * s_m^2 / s^2, where s_m^2 is the variance of the batch means
/// and s^2 the series variance, both 1/count-normalized and both computed
/// on the truncated series. Plan defaults to BatchPlan::for_length(n).
TauEstimate batch_means_tau(const TimeSeries& series,
                            std::optional<BatchPlan> plan = std::nullopt);

} // namespace actime

#endif // ACTIME_BATCH_MEANS_HPP
