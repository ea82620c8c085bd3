#include "actime/estimate.hpp"

#include "actime/errors.hpp"

namespace actime {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::BatchMeans: return "batch-means";
    case Method::SpectrumFit: return "spectrum-fit";
    case Method::Ips: return "ips";
    case Method::Ims: return "ims";
    case Method::Ics: return "ics";
    case Method::ArProcess: return "ar";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  for (Method m : {Method::BatchMeans, Method::SpectrumFit, Method::Ips, Method::Ims,
                   Method::Ics, Method::ArProcess}) {
    if (name == to_string(m)) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateSeries: return "degenerate-series";
    case ErrorCode::TooShort: return "too-short";
    case ErrorCode::BadLength: return "bad-length";
    case ErrorCode::NonFiniteValue: return "non-finite-value";
    case ErrorCode::FailedEstimate: return "failed-estimate";
    case ErrorCode::SingularSystem: return "singular-system";
    case ErrorCode::Unstable: return "unstable";
    case ErrorCode::NearUnitRoot: return "near-unit-root";
    case ErrorCode::TooManyRejections: return "too-many-rejections";
    case ErrorCode::NonStationaryParam: return "non-stationary-param";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::ConfigError: return "config-error";
    case ErrorCode::IoError: return "io-error";
  }
  return "unknown";
}

} // namespace actime
