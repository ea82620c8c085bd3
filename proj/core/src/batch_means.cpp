#include "actime/batch_means.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace actime {

namespace {

// Exact floor(n^(2/3)): largest m with m^3 <= n^2. The floating-point
// estimate can land on either side of the integer, so adjust it.
std::size_t floor_n23(std::size_t n) {
  const auto n2 = static_cast<unsigned long long>(n) * n;
  auto m = static_cast<unsigned long long>(std::cbrt(static_cast<double>(n2)));
  while (m > 1 && m * m * m > n2) --m;
  while ((m + 1) * (m + 1) * (m + 1) <= n2) ++m;
  return static_cast<std::size_t>(m);
}

} // namespace

BatchPlan BatchPlan::for_length(std::size_t n) {
  if (n < 8)
    throw TooShort("batch means needs n >= 8, got " + std::to_string(n));
  BatchPlan plan;
  plan.batch_size = floor_n23(n);
  plan.num_batches = n / plan.batch_size;
  if (plan.num_batches < 2)
    throw TooShort("fewer than two batches at n = " + std::to_string(n));
  return plan;
}

BatchPlan BatchPlan::with_batch_size(std::size_t n, std::size_t batch_size) {
  if (batch_size < 1)
    throw TooShort("batch size must be positive");
  BatchPlan plan;
  plan.batch_size = batch_size;
  plan.num_batches = n / batch_size;
  if (plan.num_batches < 2)
    throw TooShort("fewer than two batches of size " + std::to_string(batch_size) +
                   " fit in n = " + std::to_string(n));
  return plan;
}

TauEstimate batch_means_tau(const TimeSeries& series, std::optional<BatchPlan> plan_opt) {
  const std::size_t n = series.size();
  const BatchPlan plan = plan_opt ? *plan_opt : BatchPlan::for_length(n);
  const std::size_t m = plan.batch_size;
  const std::size_t b = plan.num_batches;
  if (b < 2 || m < 1 || b * m > n)
    throw TooShort("batch plan does not fit series of length " + std::to_string(n));

  const std::size_t used = b * m;

  bool constant = true;
  for (std::size_t i = 1; i < used && constant; ++i)
    constant = series[i] == series[0];
  if (constant)
    throw DegenerateSeries("constant series, batch means undefined");

  // Grand mean and variance over the truncated series only, so that the
  // numerator and denominator statistics see identical data.
  double sum = 0.0;
  for (std::size_t i = 0; i < used; ++i) sum += series[i];
  const double grand_mean = sum / static_cast<double>(used);

  double ss = 0.0;
  for (std::size_t i = 0; i < used; ++i) {
    const double d = series[i] - grand_mean;
    ss += d * d;
  }
  const double s2 = ss / static_cast<double>(used);
  if (!(s2 > 0.0))
    throw DegenerateSeries("zero variance, batch means undefined");

  double ssb = 0.0;
  for (std::size_t j = 0; j < b; ++j) {
    double bsum = 0.0;
    for (std::size_t i = j * m; i < (j + 1) * m; ++i) bsum += series[i];
    const double d = bsum / static_cast<double>(m) - grand_mean;
    ssb += d * d;
  }
  const double sm2 = ssb / static_cast<double>(b);

  TauEstimate est;
  est.method = Method::BatchMeans;
  est.n_used = n;
  est.tau = static_cast<double>(m) * sm2 / s2;
  if (!(est.tau > 0.0)) {
    // Exactly equal batch means (e.g. a perfectly antithetic chain).
    est.tau = 1e-6;
    est.detail["clamped"] = 1.0;
  }
  est.detail["batch_size"] = static_cast<double>(m);
  est.detail["num_batches"] = static_cast<double>(b);
  return est;
}

} // namespace actime
