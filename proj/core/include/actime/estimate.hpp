#ifndef ACTIME_ESTIMATE_HPP
#define ACTIME_ESTIMATE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace actime {

enum class Method { BatchMeans, SpectrumFit, Ips, Ims, Ics, ArProcess };

std::string_view to_string(Method m) noexcept;

/// Parse CLI spellings like "batch-means" or "ar". Throws ConfigError.
Method method_from_string(std::string_view name);

/// Point estimate of the autocorrelation time, in units of chain steps.
/// `detail` carries method-specific diagnostics (batch size, truncation
/// lag, AR order, regression point count, ...), keyed by name.
struct TauEstimate {
  double tau = 0.0;
  Method method = Method::BatchMeans;
  std::size_t n_used = 0;
  std::map<std::string, double> detail;
};

} // namespace actime

#endif // ACTIME_ESTIMATE_HPP
