#ifndef ACTIME_INITIAL_SEQ_HPP
#define ACTIME_INITIAL_SEQ_HPP

#include <cstddef>
#include <vector>

#include "actime/estimate.hpp"
#include "actime/stats.hpp"
#include "actime/time_series.hpp"

namespace actime {

/// Sums of pairs of consecutive autocorrelations,
/// gamma[m] = rho[2m] + rho[2m+1]. For a reversible chain these pair sums
/// are positive, decreasing and convex (Geyer 1992), which is what the
/// initial-sequence estimators successively enforce.
///
/// truncation_m is the index of the last pair before the first
/// nonpositive one, i.e. all of gamma[0..truncation_m] are > 0;
/// it is -1 when already gamma[0] <= 0. A trailing unpaired
/// autocorrelation (even max lag) is ignored.
struct GammaSequence {
  std::vector<double> gamma;
  std::ptrdiff_t truncation_m = -1;
};

GammaSequence gamma_pairs(const AcfVector& acf);

/// Largest convex sequence lying pointwise at or below `values`
/// (the lower convex hull of the graph {(m, values[m])}), O(M).
std::vector<double> greatest_convex_minorant(const std::vector<double>& values);

/// Running minimum, the monotone smoothing step of the IMS estimator.
std::vector<double> running_minimum(const std::vector<double>& values);

/// Pair sums after the smoothing each estimator applies: the identity for
/// ips, the running minimum for ims, and for ics the convex minorant of
/// the positive prefix (raw values are kept past the truncation point).
std::vector<double> smoothed_gamma(const GammaSequence& pairs, Method method);

/// Initial positive / monotone / convex sequence estimators:
/// tau = 2 * sum(smoothed gamma[0..truncation_m]) - 1, with
///   ips: no smoothing,
///   ims: running minimum before truncation,
///   ics: greatest convex minorant of the truncated prefix, taken with a
///        virtual zero appended so the result is also nonincreasing.
/// A nonpositive total is clamped to 1e-6 (detail key "clamped").
TauEstimate ips_tau(const TimeSeries& series);
TauEstimate ims_tau(const TimeSeries& series);
TauEstimate ics_tau(const TimeSeries& series);

} // namespace actime

#endif // ACTIME_INITIAL_SEQ_HPP
