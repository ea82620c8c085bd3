#include "actime/time_series.hpp"

#include <cmath>

namespace actime {

TimeSeries::TimeSeries(std::vector<double> values, std::string label,
                       std::optional<std::uint64_t> seed)
    : values_(std::move(values)), label_(std::move(label)), seed_(seed) {
  if (values_.empty())
    throw BadLength("time series must contain at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw NonFiniteValue("non-finite value at index " + std::to_string(i));
  }
}

TimeSeries TimeSeries::prefix(std::size_t length) const {
  if (length < 1 || length > values_.size())
    throw BadLength("prefix length " + std::to_string(length) +
                    " outside [1, " + std::to_string(values_.size()) + "]");
  // Values are already validated, so bypass the checking constructor.
  TimeSeries out(*this);
  out.values_.resize(length);
  return out;
}

} // namespace actime
