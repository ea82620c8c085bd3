#ifndef ACTIME_ERRORS_HPP
#define ACTIME_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace actime {

/// Stable identifiers for everything that can go wrong during estimation.
/// The sweep harness records these as status codes instead of propagating.
enum class ErrorCode {
  DegenerateSeries,   // zero variance, autocorrelation undefined
  TooShort,           // not enough data for the requested analysis
  BadLength,          // prefix length outside [1, n]
  NonFiniteValue,     // NaN or infinity in input data
  FailedEstimate,     // method cannot produce an estimate at this n
  SingularSystem,     // Toeplitz system numerically singular
  Unstable,           // AR coefficients outside the stationary region
  NearUnitRoot,       // 1 - sum(pi) too close to zero, tau would overflow
  TooManyRejections,  // more than half of the Monte Carlo draws discarded
  NonStationaryParam, // generator parameters give a non-stationary process
  Overflow,           // transform produced a non-finite value
  ConfigError,        // malformed sweep configuration
  IoError,            // file could not be read or written
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

namespace detail {
template <ErrorCode Code>
class ErrorOf : public Error {
public:
  explicit ErrorOf(const std::string& what) : Error(Code, what) {}
};
} // namespace detail

using DegenerateSeries   = detail::ErrorOf<ErrorCode::DegenerateSeries>;
using TooShort           = detail::ErrorOf<ErrorCode::TooShort>;
using BadLength          = detail::ErrorOf<ErrorCode::BadLength>;
using NonFiniteValue     = detail::ErrorOf<ErrorCode::NonFiniteValue>;
using FailedEstimate     = detail::ErrorOf<ErrorCode::FailedEstimate>;
using SingularSystem     = detail::ErrorOf<ErrorCode::SingularSystem>;
using Unstable           = detail::ErrorOf<ErrorCode::Unstable>;
using NearUnitRoot       = detail::ErrorOf<ErrorCode::NearUnitRoot>;
using TooManyRejections  = detail::ErrorOf<ErrorCode::TooManyRejections>;
using NonStationaryParam = detail::ErrorOf<ErrorCode::NonStationaryParam>;
using Overflow           = detail::ErrorOf<ErrorCode::Overflow>;
using ConfigError        = detail::ErrorOf<ErrorCode::ConfigError>;
using IoError            = detail::ErrorOf<ErrorCode::IoError>;

} // namespace actime

#endif // ACTIME_ERRORS_HPP
