#ifndef ACTIME_AR_PROCESS_HPP
#define ACTIME_AR_PROCESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "actime/estimate.hpp"
#include "actime/stats.hpp"
#include "actime/time_series.hpp"

namespace actime {

/// AR(p) model X_t = mu + pi_1 X_{t-1} + ... + pi_p X_{t-p} + a_t fitted
/// by Yule-Walker. The fit is always stationary because the 1/n-normalized
/// autocovariance matrix is positive semi-definite.
struct ArFit {
  std::size_t order = 0;         // p
  std::vector<double> pi;        // pi_1 .. pi_p
  std::vector<double> rho;       // sample autocorrelations rho_1 .. rho_p
  double sigma_a2 = 0.0;         // innovation variance, <= s2
  double s2 = 0.0;               // sample variance of the series
  double mu = 0.0;               // sample mean
  std::vector<double> coeff_cov; // p x p row-major, (sigma_a2/s2) R^-1 / n
};

/// Fit AR(p) with fixed order p via the Levinson-Durbin recursion.
/// Throws SingularSystem when the Toeplitz system has condition number
/// above 1e12, DegenerateSeries on zero variance.
ArFit yule_walker(const TimeSeries& series, std::size_t p);

/// argmin over p in {0..p_max} of AIC(p) = n ln(sigma_a2(p)) + 2p,
/// ties broken toward smaller p. Default p_max = min(n-2, ceil(10 log10 n)).
std::size_t select_order_aic(const TimeSeries& series,
                             std::optional<std::size_t> p_max = std::nullopt);

/// True iff the companion matrix of pi has spectral radius < 1.
bool is_stationary(const std::vector<double>& pi);

/// Autocorrelations rho_0..rho_K implied by AR coefficients: the
/// stationary Yule-Walker system gives rho_1..rho_p, the recursion
/// rho_k = sum_j pi_j rho_{k-j} extends beyond. Throws Unstable.
/// (Model-based: n is 0 and s2 is 1 in the result.)
AcfVector implied_acf(const ArFit& fit, std::size_t max_lag);

/// tau implied by a fitted AR model,
/// tau = (1 - rho^T pi) / (1 - sum(pi))^2, and 1 for p = 0.
/// Throws NearUnitRoot when |1 - sum(pi)| < 1e-8.
double tau_from_ar(const std::vector<double>& pi, const std::vector<double>& rho);

/// Fit with AIC-selected order (or `order` if given) and return tau.
TauEstimate ar_tau(const TimeSeries& series,
                   std::optional<std::size_t> order = std::nullopt,
                   std::optional<std::size_t> p_max = std::nullopt);

struct TauInterval {
  TauEstimate estimate;
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  std::size_t n_draws = 0;
  std::size_t n_rejected = 0;
};

/// Percentile confidence interval for tau: draw coefficient vectors from
/// N(pi_hat, coeff_cov), discard non-stationary draws, map the rest
/// through the implied ACF and the tau formula. Deterministic per seed.
/// Throws TooManyRejections when over half the draws are unstable.
TauInterval ar_tau_ci(const TimeSeries& series, double level = 0.95,
                      std::size_t n_draws = 1000, std::uint64_t seed = 0,
                      std::optional<std::size_t> order = std::nullopt,
                      std::optional<std::size_t> p_max = std::nullopt);

/// Monte Carlo step of ar_tau_ci separated out for testing: interval from
/// an existing fit, with the plug-in estimate supplied by the caller.
TauInterval tau_interval_from_fit(const ArFit& fit, const TauEstimate& point,
                                  double level, std::size_t n_draws,
                                  std::uint64_t seed);

} // namespace actime

#endif // ACTIME_AR_PROCESS_HPP
