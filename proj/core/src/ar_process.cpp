#include "actime/ar_process.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "actime/rng.hpp"

namespace actime {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr double kUnitRootTol = 1e-8;

struct LevinsonPath {
  // pi[k] holds the order-k coefficient vector, k = 0..p.
  std::vector<std::vector<double>> pi;
  // variance_ratio[k] = sigma_a2(k) / s2, nonincreasing in k.
  std::vector<double> variance_ratio;
};

// Levinson-Durbin recursion on the autocorrelation sequence; solves every
// Toeplitz system R_k pi = rho_{1:k} for k = 0..p in O(p^2) total.
LevinsonPath levinson(const std::vector<double>& rho, std::size_t p) {
  LevinsonPath path;
  path.pi.resize(p + 1);
  path.variance_ratio.assign(p + 1, 1.0);
  std::vector<double> prev;
  double v = 1.0;
  for (std::size_t k = 1; k <= p; ++k) {
    double acc = rho[k];
    for (std::size_t j = 1; j < k; ++j) acc -= prev[j - 1] * rho[k - j];
    if (!(v > 0.0))
      throw SingularSystem("Toeplitz system singular at order " + std::to_string(k));
    const double reflection = acc / v;
    std::vector<double> cur(k);
    cur[k - 1] = reflection;
    for (std::size_t j = 1; j < k; ++j)
      cur[j - 1] = prev[j - 1] - reflection * prev[k - 1 - j];
    v *= (1.0 - reflection * reflection);
    if (v < 0.0) v = 0.0;
    path.pi[k] = cur;
    path.variance_ratio[k] = v;
    prev = std::move(cur);
  }
  return path;
}

Eigen::MatrixXd toeplitz(const std::vector<double>& rho, std::size_t p) {
  Eigen::MatrixXd r(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rho[static_cast<std::size_t>(i > j ? i - j : j - i)];
  return r;
}

double spectral_radius(const std::vector<double>& pi) {
  const std::size_t p = pi.size();
  if (p == 0) return 0.0;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  for (std::size_t j = 0; j < p; ++j) companion(0, static_cast<Eigen::Index>(j)) = pi[j];
  for (std::size_t i = 1; i < p; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  return companion.eigenvalues().cwiseAbs().maxCoeff();
}

// rho_1..rho_p of the stationary process with coefficients pi.
std::vector<double> stationary_rho(const std::vector<double>& pi) {
  const std::size_t p = pi.size();
  if (p == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(p, p);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(p);
  // rho_k = sum_j pi_j rho_{|k-j|}, rho_0 = 1, k = 1..p
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t j = 1; j <= p; ++j) {
      const std::size_t lag = k > j ? k - j : j - k;
      if (lag == 0)
        b(static_cast<Eigen::Index>(k - 1)) += pi[j - 1];
      else
        a(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(lag - 1)) -= pi[j - 1];
    }
  }
  const Eigen::VectorXd rho = a.partialPivLu().solve(b);
  return std::vector<double>(rho.data(), rho.data() + p);
}

std::size_t default_p_max(std::size_t n) {
  const auto by_rule = static_cast<std::size_t>(
      std::ceil(10.0 * std::log10(static_cast<double>(n))));
  return std::min(n - 2, by_rule);
}

// Shared by yule_walker and ar_tau: coefficients and innovation variance
// come from the Levinson path; the coefficient covariance needs R_p^-1.
ArFit assemble_fit(const TimeSeries& series, const AcfVector& acf,
                   const LevinsonPath& path, std::size_t p) {
  ArFit fit;
  fit.order = p;
  fit.mu = mean(series);
  fit.s2 = acf.s2;
  fit.pi = path.pi[p];
  fit.rho.assign(acf.rho.begin() + 1, acf.rho.begin() + 1 + static_cast<std::ptrdiff_t>(p));
  fit.sigma_a2 = acf.s2 * path.variance_ratio[p];
  if (p == 0) return fit;

  const Eigen::MatrixXd r = toeplitz(acf.rho, p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(r);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxCondition)
    throw SingularSystem("autocorrelation matrix ill-conditioned at order " +
                         std::to_string(p));
  const Eigen::MatrixXd rinv =
      eig.eigenvectors() * eig.eigenvalues().cwiseInverse().asDiagonal() *
      eig.eigenvectors().transpose();

  const double scale = path.variance_ratio[p] / static_cast<double>(series.size());
  fit.coeff_cov.resize(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      fit.coeff_cov[i * p + j] =
          scale * rinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return fit;
}

} // namespace

ArFit yule_walker(const TimeSeries& series, std::size_t p) {
  const std::size_t n = series.size();
  if (n < 2 || p > n - 2)
    throw TooShort("AR order " + std::to_string(p) + " too high for n = " +
                   std::to_string(n));
  const AcfVector acf = sample_acf(series, p); // throws DegenerateSeries on s2 == 0
  const LevinsonPath path = levinson(acf.rho, p);
  return assemble_fit(series, acf, path, p);
}

std::size_t select_order_aic(const TimeSeries& series, std::optional<std::size_t> p_max_opt) {
  const std::size_t n = series.size();
  if (n < 2)
    throw TooShort("order selection needs n >= 2");
  std::size_t p_max = p_max_opt.value_or(default_p_max(n));
  p_max = std::min(p_max, n - 2);

  const AcfVector acf = sample_acf(series, p_max);
  const LevinsonPath path = levinson(acf.rho, p_max);

  const double dn = static_cast<double>(n);
  std::size_t best = 0;
  double best_aic = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p <= p_max; ++p) {
    const double sigma2 = acf.s2 * path.variance_ratio[p];
    if (!(sigma2 > 0.0)) break; // exact fit; higher orders are degenerate
    const double aic = dn * std::log(sigma2) + 2.0 * static_cast<double>(p);
    if (aic < best_aic) {
      best_aic = aic;
      best = p;
    }
  }
  return best;
}

bool is_stationary(const std::vector<double>& pi) {
  return spectral_radius(pi) < 1.0;
}

AcfVector implied_acf(const ArFit& fit, std::size_t max_lag) {
  if (!is_stationary(fit.pi))
    throw Unstable("AR coefficients outside the stationary region");
  const std::size_t p = fit.order;

  AcfVector acf;
  acf.n = 0;
  acf.s2 = 1.0;
  acf.rho.assign(max_lag + 1, 0.0);
  acf.rho[0] = 1.0;

  const auto head = stationary_rho(fit.pi);
  for (std::size_t k = 1; k <= std::min(p, max_lag); ++k) acf.rho[k] = head[k - 1];
  for (std::size_t k = p + 1; k <= max_lag; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= p; ++j) acc += fit.pi[j - 1] * acf.rho[k - j];
    acf.rho[k] = acc;
  }
  return acf;
}

double tau_from_ar(const std::vector<double>& pi, const std::vector<double>& rho) {
  if (pi.empty()) return 1.0;
  double num = 1.0, gain = 1.0;
  for (std::size_t j = 0; j < pi.size(); ++j) {
    num -= rho[j] * pi[j];
    gain -= pi[j];
  }
  if (std::abs(gain) < kUnitRootTol)
    throw NearUnitRoot("1 - sum(pi) within 1e-8 of zero; series too short to resolve tau");
  return num / (gain * gain);
}

TauEstimate ar_tau(const TimeSeries& series, std::optional<std::size_t> order,
                   std::optional<std::size_t> p_max) {
  const std::size_t p = order ? *order : select_order_aic(series, p_max);
  const ArFit fit = yule_walker(series, p);

  TauEstimate est;
  est.method = Method::ArProcess;
  est.n_used = series.size();
  est.tau = tau_from_ar(fit.pi, fit.rho);
  est.detail["p"] = static_cast<double>(p);
  est.detail["sigma_a2"] = fit.sigma_a2;
  return est;
}

TauInterval tau_interval_from_fit(const ArFit& fit, const TauEstimate& point,
                                  double level, std::size_t n_draws,
                                  std::uint64_t seed) {
  if (!(level > 0.0 && level < 1.0))
    throw ConfigError("confidence level must lie in (0, 1)");
  if (n_draws < 100)
    throw ConfigError("need at least 100 Monte Carlo draws");

  TauInterval interval;
  interval.estimate = point;
  interval.level = level;

  const std::size_t p = fit.order;
  if (p == 0) {
    // No coefficient uncertainty is modeled for white noise.
    interval.lower = interval.upper = 1.0;
    return interval;
  }

  Eigen::MatrixXd cov(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = fit.coeff_cov[i * p + j];
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    // Covariance can lose definiteness to rounding; nudge the diagonal.
    const double jitter = 1e-12 * cov.diagonal().maxCoeff();
    llt.compute(cov + jitter * Eigen::MatrixXd::Identity(p, p));
    if (llt.info() != Eigen::Success)
      throw SingularSystem("coefficient covariance is not positive definite");
  }
  const Eigen::MatrixXd chol = llt.matrixL();

  Rng rng(seed);
  std::vector<double> taus;
  taus.reserve(n_draws);
  ArFit draw = fit;
  for (std::size_t d = 0; d < n_draws; ++d) {
    Eigen::VectorXd z(p);
    for (std::size_t i = 0; i < p; ++i) z(static_cast<Eigen::Index>(i)) = rng.normal();
    const Eigen::VectorXd shift = chol * z;
    for (std::size_t i = 0; i < p; ++i) draw.pi[i] = fit.pi[i] + shift(static_cast<Eigen::Index>(i));
    if (!is_stationary(draw.pi)) {
      ++interval.n_rejected;
      continue;
    }
    const auto rho = stationary_rho(draw.pi);
    double tau;
    try {
      tau = tau_from_ar(draw.pi, rho);
    } catch (const NearUnitRoot&) {
      ++interval.n_rejected;
      continue;
    }
    taus.push_back(tau);
  }
  interval.n_draws = n_draws;
  if (2 * interval.n_rejected > n_draws)
    throw TooManyRejections("over half of the Monte Carlo draws were non-stationary");

  std::sort(taus.begin(), taus.end());
  const auto quantile = [&taus](double q) {
    const double h = q * static_cast<double>(taus.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, taus.size() - 1);
    const double w = h - static_cast<double>(lo);
    return (1.0 - w) * taus[lo] + w * taus[hi];
  };
  interval.lower = quantile((1.0 - level) / 2.0);
  interval.upper = quantile((1.0 + level) / 2.0);
  return interval;
}

TauInterval ar_tau_ci(const TimeSeries& series, double level, std::size_t n_draws,
                      std::uint64_t seed, std::optional<std::size_t> order,
                      std::optional<std::size_t> p_max) {
  const std::size_t p = order ? *order : select_order_aic(series, p_max);
  const ArFit fit = yule_walker(series, p);

  TauEstimate point;
  point.method = Method::ArProcess;
  point.n_used = series.size();
  point.tau = tau_from_ar(fit.pi, fit.rho);
  point.detail["p"] = static_cast<double>(p);
  point.detail["sigma_a2"] = fit.sigma_a2;

  return tau_interval_from_fit(fit, point, level, n_draws, seed);
}

} // namespace actime
