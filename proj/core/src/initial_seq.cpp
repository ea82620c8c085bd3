#include "actime/initial_seq.hpp"

#include <algorithm>
#include <cstddef>

namespace actime {

namespace {

constexpr double kTauFloor = 1e-6;

AcfVector full_acf(const TimeSeries& series) {
  const std::size_t n = series.size();
  if (n < 4)
    throw TooShort("initial sequence estimators need n >= 4");
  // Truncation almost always happens long before lag n - 2, but the FFT
  // path makes the full ACF cheap, so compute it once.
  return sample_acf(series, n - 2);
}

TauEstimate assemble(Method method, std::size_t n, const GammaSequence& pairs,
                     const std::vector<double>& smoothed, std::ptrdiff_t last) {
  double total = 0.0;
  for (std::ptrdiff_t m = 0; m <= last; ++m) total += smoothed[static_cast<std::size_t>(m)];

  TauEstimate est;
  est.method = method;
  est.n_used = n;
  est.tau = 2.0 * total - 1.0;
  if (last < 0) {
    // Strongly antithetic chain: nothing retained, fall back to the first
    // pair sum alone.
    est.tau = 2.0 * pairs.gamma.front() - 1.0;
  }
  est.detail["truncation_m"] = static_cast<double>(last);
  if (!(est.tau > 0.0)) {
    est.tau = kTauFloor;
    est.detail["clamped"] = 1.0;
  }
  return est;
}

std::ptrdiff_t first_nonpositive(const std::vector<double>& g) {
  for (std::size_t m = 0; m < g.size(); ++m)
    if (!(g[m] > 0.0)) return static_cast<std::ptrdiff_t>(m) - 1;
  return static_cast<std::ptrdiff_t>(g.size()) - 1;
}

} // namespace

GammaSequence gamma_pairs(const AcfVector& acf) {
  if (acf.rho.size() < 2)
    throw TooShort("pair sums need autocorrelations to at least lag 1");
  GammaSequence seq;
  seq.gamma.reserve(acf.rho.size() / 2);
  for (std::size_t m = 0; 2 * m + 1 < acf.rho.size(); ++m)
    seq.gamma.push_back(acf.rho[2 * m] + acf.rho[2 * m + 1]);
  seq.truncation_m = first_nonpositive(seq.gamma);
  return seq;
}

std::vector<double> greatest_convex_minorant(const std::vector<double>& values) {
  const std::size_t m = values.size();
  if (m <= 2) return values;

  // Lower hull by monotone stack: keep vertices with increasing slopes.
  std::vector<std::size_t> hull;
  hull.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull[hull.size() - 1];
      // slope(a,b) >= slope(b,i) means b is not a hull vertex
      const double lhs = (values[b] - values[a]) * static_cast<double>(i - b);
      const double rhs = (values[i] - values[b]) * static_cast<double>(b - a);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }

  std::vector<double> out(m);
  for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
    const std::size_t i0 = hull[seg], i1 = hull[seg + 1];
    const double v0 = values[i0], v1 = values[i1];
    const double step = (v1 - v0) / static_cast<double>(i1 - i0);
    for (std::size_t i = i0; i < i1; ++i)
      out[i] = v0 + step * static_cast<double>(i - i0);
  }
  out[m - 1] = values[hull.back()];
  return out;
}

std::vector<double> running_minimum(const std::vector<double>& values) {
  std::vector<double> out(values);
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = std::min(out[i], out[i - 1]);
  return out;
}

std::vector<double> smoothed_gamma(const GammaSequence& pairs, Method method) {
  switch (method) {
    case Method::Ips:
      return pairs.gamma;
    case Method::Ims:
      return running_minimum(pairs.gamma);
    case Method::Ics: {
      std::vector<double> out(pairs.gamma);
      const std::ptrdiff_t last = pairs.truncation_m;
      if (last >= 0) {
        // Hull of the positive prefix with a virtual zero appended: the
        // zero pins the right end down, which makes the minorant
        // nonincreasing as well as convex. Without it the plain hull
        // could tilt upward at the end and break ics <= ims.
        std::vector<double> prefix(pairs.gamma.begin(), pairs.gamma.begin() + last + 1);
        prefix.push_back(0.0);
        const auto hull = greatest_convex_minorant(prefix);
        std::copy(hull.begin(), hull.end() - 1, out.begin());
      }
      return out;
    }
    default:
      throw ConfigError("pair-sum smoothing is defined for ips, ims and ics only");
  }
}

TauEstimate ips_tau(const TimeSeries& series) {
  const auto pairs = gamma_pairs(full_acf(series));
  return assemble(Method::Ips, series.size(), pairs, pairs.gamma, pairs.truncation_m);
}

TauEstimate ims_tau(const TimeSeries& series) {
  const auto pairs = gamma_pairs(full_acf(series));
  const auto smoothed = smoothed_gamma(pairs, Method::Ims);
  return assemble(Method::Ims, series.size(), pairs, smoothed, first_nonpositive(smoothed));
}

TauEstimate ics_tau(const TimeSeries& series) {
  const auto pairs = gamma_pairs(full_acf(series));
  const auto smoothed = smoothed_gamma(pairs, Method::Ics);
  return assemble(Method::Ics, series.size(), pairs, smoothed, pairs.truncation_m);
}

} // namespace actime
