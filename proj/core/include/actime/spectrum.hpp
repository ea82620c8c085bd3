#ifndef ACTIME_SPECTRUM_HPP
#define ACTIME_SPECTRUM_HPP

#include <cstddef>
#include <vector>

#include "actime/estimate.hpp"
#include "actime/time_series.hpp"

namespace actime {

/// Raw periodogram at the Fourier frequencies f_j = j/n (cycles/step),
/// j = 1 .. floor((n-1)/2). Frequency zero is excluded.
///
/// power[j-1] = |sum_t (X_t - mean) exp(-2 pi i f_j t)|^2 / n, so for a
/// centered series Parseval gives sum_j 2 power_j / n = s^2 minus the
/// (near-zero) DC term and, for even n, the Nyquist term, each over n^2.
struct Periodogram {
  std::vector<double> freqs;
  std::vector<double> power;
};

Periodogram periodogram(const TimeSeries& series);

/// Polynomial fit to the low-frequency log-periodogram.
/// coeffs are in the frequency basis, constant term first, so
/// i0_hat == exp(coeffs[0]).
struct SpectrumFitResult {
  double i0_hat = 0.0;     // estimated spectrum at frequency zero
  int order = 1;           // 1 or 2
  std::size_t n_points = 0;
  std::vector<double> coeffs;
};

/// Least-squares fit of log I(f_j) + gamma_E against a degree-`order`
/// polynomial over the lowest min(floor(sqrt(n)), #{f_j < 1/4})
/// frequencies. The Euler-Mascheroni offset undoes the downward bias of
/// the log of an exponentially distributed ordinate.
///
/// Throws FailedEstimate when fewer than order + 2 fit points exist.
SpectrumFitResult spectrum_fit(const TimeSeries& series, int order = 1);

/// tau = I0_hat / s^2. An iid series has a flat spectrum with
/// I0 ~= s^2, so this normalization yields tau ~= 1 there.
TauEstimate spectrum_fit_tau(const TimeSeries& series, int order = 1);

} // namespace actime

#endif // ACTIME_SPECTRUM_HPP
