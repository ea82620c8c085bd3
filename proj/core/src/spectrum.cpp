#include "actime/spectrum.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "actime/stats.hpp"
#include "fft.hpp"

namespace actime {

namespace {
constexpr double kEulerMascheroni = 0.57721566490153286061;
} // namespace

Periodogram periodogram(const TimeSeries& series) {
  const std::size_t n = series.size();
  if (n < 8)
    throw TooShort("periodogram needs n >= 8, got " + std::to_string(n));
  if (is_constant(series) || !(variance(series) > 0.0))
    throw DegenerateSeries("zero variance, periodogram undefined");

  const double m = mean(series);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = series[i] - m;

  const auto spec = detail::fft_r2c(x);
  const std::size_t count = (n - 1) / 2;

  Periodogram pg;
  pg.freqs.resize(count);
  pg.power.resize(count);
  for (std::size_t j = 1; j <= count; ++j) {
    pg.freqs[j - 1] = static_cast<double>(j) / static_cast<double>(n);
    pg.power[j - 1] = std::norm(spec[j]) / static_cast<double>(n);
  }
  return pg;
}

SpectrumFitResult spectrum_fit(const TimeSeries& series, int order) {
  if (order != 1 && order != 2)
    throw ConfigError("spectrum fit order must be 1 or 2");

  const auto pg = periodogram(series);
  const std::size_t n = series.size();

  // Fit window: the lowest floor(sqrt(n)) Fourier frequencies, restricted
  // to f < 1/4 so only the low end of the spectrum informs the intercept.
  std::size_t usable = 0;
  while (usable < pg.freqs.size() && pg.freqs[usable] < 0.25) ++usable;
  std::size_t n_points = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  if (n_points > usable) n_points = usable;

  const std::size_t min_points = static_cast<std::size_t>(order) + 2;
  if (n_points < min_points)
    throw FailedEstimate("spectrum fit needs at least " + std::to_string(min_points) +
                         " low frequencies, have " + std::to_string(n_points));

  std::vector<double> f, y;
  f.reserve(n_points);
  y.reserve(n_points);
  for (std::size_t j = 0; j < n_points; ++j) {
    if (pg.power[j] <= 0.0) continue; // exact zeros carry no log information
    f.push_back(pg.freqs[j]);
    y.push_back(std::log(pg.power[j]) + kEulerMascheroni);
  }
  if (f.size() < min_points)
    throw FailedEstimate("too few positive periodogram ordinates for the fit");

  // Least squares on frequencies rescaled to [-1, 1]; the raw Vandermonde
  // system is badly conditioned because f_j is O(1/sqrt(n)).
  const double f_lo = f.front(), f_hi = f.back();
  const double c = 0.5 * (f_lo + f_hi), h = 0.5 * (f_hi - f_lo);
  const int cols = order + 1;
  Eigen::MatrixXd X(f.size(), cols);
  Eigen::VectorXd b(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double u = (f[i] - c) / h;
    X(i, 0) = 1.0;
    X(i, 1) = u;
    if (cols > 2) X(i, 2) = u * u;
    b(static_cast<Eigen::Index>(i)) = y[i];
  }
  const Eigen::VectorXd a = (X.transpose() * X).ldlt().solve(X.transpose() * b);

  // Map back to the frequency basis, constant term first.
  SpectrumFitResult fit;
  fit.order = order;
  fit.n_points = f.size();
  fit.coeffs.assign(static_cast<std::size_t>(cols), 0.0);
  if (order == 1) {
    fit.coeffs[0] = a(0) - a(1) * c / h;
    fit.coeffs[1] = a(1) / h;
  } else {
    fit.coeffs[0] = a(0) - a(1) * c / h + a(2) * c * c / (h * h);
    fit.coeffs[1] = a(1) / h - 2.0 * a(2) * c / (h * h);
    fit.coeffs[2] = a(2) / (h * h);
  }
  fit.i0_hat = std::exp(fit.coeffs[0]);
  return fit;
}

TauEstimate spectrum_fit_tau(const TimeSeries& series, int order) {
  const auto fit = spectrum_fit(series, order);
  const double s2 = variance(series);

  TauEstimate est;
  est.method = Method::SpectrumFit;
  est.n_used = series.size();
  est.tau = fit.i0_hat / s2;
  est.detail["order"] = static_cast<double>(fit.order);
  est.detail["n_points"] = static_cast<double>(fit.n_points);
  est.detail["i0_hat"] = fit.i0_hat;
  return est;
}

} // namespace actime
