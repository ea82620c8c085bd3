#include "actime/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "actime/batch_means.hpp"
#include "format.hpp"

namespace actime {

namespace {

// Two-Gaussian mixture sampled by a deliberately mistuned random-walk
// Metropolis chain: the second mode is narrow relative to the proposal,
// so moves proposed near it are rarely accepted and mode switches are
// rare. Constants calibrated for a long-run tau around 200.
constexpr double kBimodalWeightLow = 0.7;
constexpr double kBimodalMeanLow = 0.0;
constexpr double kBimodalSdLow = 1.0;
constexpr double kBimodalMeanHigh = 4.7;
constexpr double kBimodalSdHigh = 0.38;
constexpr double kBimodalProposalSd = 1.0;

// Hierarchical normal-means target for the slice-sampling series: eight
// group means with one observation each, a flat grand mean, and the
// log of the group-level variance as the slowly mixing coordinate that
// gets recorded. Observations are fixed synthetic constants whose small
// spread keeps the variance poorly identified (and the chain slow).
constexpr int kStepoutGroups = 8;
constexpr double kStepoutObs[kStepoutGroups] = {1.2, -1.5, 0.8, 2.0,
                                                -0.9, 1.7, -1.3, 0.4};
constexpr double kStepoutPriorMean = -2.0; // prior center of the log-variance
constexpr double kStepoutPriorSd = 1.4;
constexpr double kSliceWidth = 1.0;
// The recorded coordinate moves through a deliberately narrow, step-limited
// slice window, which is what makes this series slow.
constexpr double kStepoutVWidth = 0.25;
constexpr std::size_t kStepoutVMaxStepout = 2;

void stamp_common(TimeSeries& ts, SeriesKind kind, std::size_t burn_in) {
  ts.set_meta("kind", std::string(to_string(kind)));
  ts.set_meta("rng", kRngName);
  ts.set_meta("burn_in", std::to_string(burn_in));
}

double mixture_log_density(double x) {
  const double zl = (x - kBimodalMeanLow) / kBimodalSdLow;
  const double zh = (x - kBimodalMeanHigh) / kBimodalSdHigh;
  const double low = kBimodalWeightLow / kBimodalSdLow * std::exp(-0.5 * zl * zl);
  const double high = (1.0 - kBimodalWeightLow) / kBimodalSdHigh * std::exp(-0.5 * zh * zh);
  return std::log(low + high);
}

double require(const std::map<std::string, double>& params, const char* key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(const SeriesSpec& spec, std::initializer_list<const char*> known) {
  for (const auto& entry : spec.params) {
    const std::string& key = entry.first;
    if (std::find_if(known.begin(), known.end(),
                     [&key](const char* k) { return key == k; }) == known.end())
      throw ConfigError("unknown parameter '" + key + "' for series kind " +
                        std::string(to_string(spec.kind)));
  }
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

} // namespace

std::string_view to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::Ar1: return "ar1";
    case SeriesKind::Ar2: return "ar2";
    case SeriesKind::Ar1Arch1: return "ar1-arch1";
    case SeriesKind::MetGauss: return "met-gauss";
    case SeriesKind::BimodalMet: return "bimodal-met";
    case SeriesKind::StepoutLogVar: return "stepout-logvar";
    case SeriesKind::StepoutVar: return "stepout-var";
  }
  return "unknown";
}

SeriesKind series_kind_from_string(std::string_view name) {
  for (SeriesKind kind : {SeriesKind::Ar1, SeriesKind::Ar2, SeriesKind::Ar1Arch1,
                          SeriesKind::MetGauss, SeriesKind::BimodalMet,
                          SeriesKind::StepoutLogVar, SeriesKind::StepoutVar}) {
    if (name == to_string(kind)) return kind;
  }
  throw ConfigError("unknown series kind '" + std::string(name) + "'");
}

std::string_view to_string(TruthProvenance p) noexcept {
  switch (p) {
    case TruthProvenance::Analytic: return "analytic";
    case TruthProvenance::PaperStated: return "reported";
    case TruthProvenance::OracleEstimated: return "oracle-estimated";
  }
  return "unknown";
}

TimeSeries gen_ar1(std::size_t n, double phi, std::uint64_t seed) {
  if (!(std::abs(phi) < 1.0))
    throw NonStationaryParam("AR(1) needs |phi| < 1, got " + detail::format_double(phi));
  Rng rng(seed);
  std::vector<double> x(n);
  // Stationary initialization: the first value is already a draw from the
  // marginal N(0, 1/(1-phi^2)), so no burn-in is needed.
  x[0] = rng.normal() / std::sqrt(1.0 - phi * phi);
  for (std::size_t t = 1; t < n; ++t) x[t] = phi * x[t - 1] + rng.normal();

  TimeSeries ts(std::move(x), "ar1", seed);
  stamp_common(ts, SeriesKind::Ar1, 0);
  ts.set_meta("phi", detail::format_double(phi));
  return ts;
}

TimeSeries gen_ar2(std::size_t n, double phi1, double phi2, std::uint64_t seed,
                   std::size_t burn_in) {
  // Stationarity triangle for AR(2).
  if (!(std::abs(phi2) < 1.0 && phi1 + phi2 < 1.0 && phi2 - phi1 < 1.0))
    throw NonStationaryParam("AR(2) coefficients outside the stationary region");
  Rng rng(seed);
  double z1 = 0.0, z2 = 0.0; // start at zero, burn-in removes the transient
  std::vector<double> x(n);
  for (std::size_t t = 0; t < burn_in + n; ++t) {
    const double z = phi1 * z1 + phi2 * z2 + rng.normal();
    z2 = z1;
    z1 = z;
    if (t >= burn_in) x[t - burn_in] = z;
  }
  TimeSeries ts(std::move(x), "ar2", seed);
  stamp_common(ts, SeriesKind::Ar2, burn_in);
  ts.set_meta("phi1", detail::format_double(phi1));
  ts.set_meta("phi2", detail::format_double(phi2));
  return ts;
}

TimeSeries gen_ar1_arch1(std::size_t n, std::uint64_t seed, std::size_t burn_in) {
  Rng rng(seed);
  double z = 0.0;
  double a = rng.normal(); // a_0 ~ N(0, 1)
  std::vector<double> x(n);
  for (std::size_t t = 0; t < burn_in + n; ++t) {
    z = 0.98 * z + a;
    if (t >= burn_in) x[t - burn_in] = z;
    a = std::sqrt(0.01 + 0.99 * a * a) * rng.normal();
  }
  TimeSeries ts(std::move(x), "ar1-arch1", seed);
  stamp_common(ts, SeriesKind::Ar1Arch1, burn_in);
  return ts;
}

TimeSeries gen_met_gauss(std::size_t n, double proposal_sd, std::uint64_t seed,
                         std::size_t burn_in) {
  if (!(proposal_sd > 0.0))
    throw ConfigError("proposal_sd must be positive");
  Rng rng(seed);
  double x = 0.0;
  double log_px = -0.5 * x * x;
  std::size_t accepted = 0;
  std::vector<double> out(n);
  for (std::size_t t = 0; t < burn_in + n; ++t) {
    const double prop = x + proposal_sd * rng.normal();
    const double log_pp = -0.5 * prop * prop;
    if (std::log(rng.uniform_pos()) < log_pp - log_px) {
      x = prop;
      log_px = log_pp;
      if (t >= burn_in) ++accepted;
    }
    if (t >= burn_in) out[t - burn_in] = x;
  }
  TimeSeries ts(std::move(out), "met-gauss", seed);
  stamp_common(ts, SeriesKind::MetGauss, burn_in);
  ts.set_meta("proposal_sd", detail::format_double(proposal_sd));
  ts.set_meta("acceptance_rate",
              detail::format_double(static_cast<double>(accepted) / static_cast<double>(n)));
  return ts;
}

TimeSeries gen_bimodal_met(std::size_t n, std::uint64_t seed, std::size_t burn_in) {
  Rng rng(seed);
  double x = kBimodalMeanLow;
  double log_px = mixture_log_density(x);
  std::size_t accepted = 0;
  std::vector<double> out(n);
  for (std::size_t t = 0; t < burn_in + n; ++t) {
    const double prop = x + kBimodalProposalSd * rng.normal();
    const double log_pp = mixture_log_density(prop);
    if (std::log(rng.uniform_pos()) < log_pp - log_px) {
      x = prop;
      log_px = log_pp;
      if (t >= burn_in) ++accepted;
    }
    if (t >= burn_in) out[t - burn_in] = x;
  }
  TimeSeries ts(std::move(out), "bimodal-met", seed);
  stamp_common(ts, SeriesKind::BimodalMet, burn_in);
  ts.set_meta("acceptance_rate",
              detail::format_double(static_cast<double>(accepted) / static_cast<double>(n)));
  return ts;
}

double bimodal_target_cdf(double x) {
  const auto phi = [](double z) { return 0.5 * std::erfc(-z / 1.4142135623730951); };
  return kBimodalWeightLow * phi((x - kBimodalMeanLow) / kBimodalSdLow) +
         (1.0 - kBimodalWeightLow) * phi((x - kBimodalMeanHigh) / kBimodalSdHigh);
}

double slice_sample_step(double x0, const std::function<double(double)>& log_density,
                         double width, Rng& rng, std::size_t max_stepout) {
  // Slice level in log space; x0 always satisfies log_density(x0) >= level.
  const double level = log_density(x0) + std::log(rng.uniform_pos());

  // Stepping out. With a finite limit the expansion budget is split
  // randomly between the two sides to keep the update reversible.
  double left = x0 - width * rng.uniform();
  double right = left + width;
  if (max_stepout == static_cast<std::size_t>(-1)) {
    while (log_density(left) > level) left -= width;
    while (log_density(right) > level) right += width;
  } else {
    auto budget_left = static_cast<std::size_t>(
        static_cast<double>(max_stepout) * rng.uniform());
    std::size_t budget_right = max_stepout >= 1 ? max_stepout - 1 - budget_left : 0;
    while (budget_left > 0 && log_density(left) > level) {
      left -= width;
      --budget_left;
    }
    while (budget_right > 0 && log_density(right) > level) {
      right += width;
      --budget_right;
    }
  }

  // Shrinkage.
  for (;;) {
    const double x1 = rng.uniform(left, right);
    if (log_density(x1) >= level) return x1;
    if (x1 < x0)
      left = x1;
    else
      right = x1;
  }
}

TimeSeries gen_stepout_logvar(std::size_t n, std::uint64_t seed, std::size_t burn_in) {
  Rng rng(seed);

  // State: eight group means, the grand mean, and v = log group variance.
  std::vector<double> theta(kStepoutGroups, 0.0);
  double mu = 0.0;
  double v = 0.0;

  const auto log_post_theta = [&](int g, double th) {
    const double r_obs = kStepoutObs[g] - th;
    const double r_grp = th - mu;
    return -0.5 * r_obs * r_obs - 0.5 * r_grp * r_grp * std::exp(-v);
  };
  const auto log_post_mu = [&](double m) {
    double acc = 0.0;
    for (int g = 0; g < kStepoutGroups; ++g) {
      const double r = theta[g] - m;
      acc += r * r;
    }
    return -0.5 * acc * std::exp(-v);
  };
  const auto log_post_v = [&](double lv) {
    double acc = 0.0;
    for (int g = 0; g < kStepoutGroups; ++g) {
      const double r = theta[g] - mu;
      acc += r * r;
    }
    const double prior = (lv - kStepoutPriorMean) / kStepoutPriorSd;
    return -0.5 * kStepoutGroups * lv - 0.5 * acc * std::exp(-lv) - 0.5 * prior * prior;
  };

  std::vector<double> out(n);
  for (std::size_t t = 0; t < burn_in + n; ++t) {
    for (int g = 0; g < kStepoutGroups; ++g)
      theta[g] = slice_sample_step(
          theta[g], [&](double th) { return log_post_theta(g, th); }, kSliceWidth, rng);
    mu = slice_sample_step(mu, log_post_mu, kSliceWidth, rng);
    v = slice_sample_step(v, log_post_v, kStepoutVWidth, rng, kStepoutVMaxStepout);
    if (t >= burn_in) out[t - burn_in] = v;
  }
  TimeSeries ts(std::move(out), "stepout-logvar", seed);
  stamp_common(ts, SeriesKind::StepoutLogVar, burn_in);
  return ts;
}

TimeSeries exp_transform(const TimeSeries& series) {
  std::vector<double> out(series.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::exp(series[i]);
    if (!std::isfinite(out[i]))
      throw Overflow("exp overflow at index " + std::to_string(i));
  }
  TimeSeries ts(std::move(out),
                series.label().empty() ? "exp" : "exp(" + series.label() + ")",
                series.seed());
  for (const auto& [key, value] : series.meta()) ts.set_meta(key, value);
  ts.set_meta("transform", "exp");
  return ts;
}

TimeSeries generate(const SeriesSpec& spec) {
  switch (spec.kind) {
    case SeriesKind::Ar1:
      reject_unknown(spec, {"phi"});
      return gen_ar1(spec.n, require(spec.params, "phi", 0.98), spec.seed);
    case SeriesKind::Ar2:
      reject_unknown(spec, {"phi1", "phi2"});
      return gen_ar2(spec.n, require(spec.params, "phi1", 1.98),
                     require(spec.params, "phi2", -0.99), spec.seed,
                     spec.burn_in.value_or(10000));
    case SeriesKind::Ar1Arch1:
      reject_unknown(spec, {});
      return gen_ar1_arch1(spec.n, spec.seed, spec.burn_in.value_or(10000));
    case SeriesKind::MetGauss:
      reject_unknown(spec, {"proposal_sd"});
      return gen_met_gauss(spec.n, require(spec.params, "proposal_sd", kMetGaussProposalSd),
                           spec.seed, spec.burn_in.value_or(10000));
    case SeriesKind::BimodalMet:
      reject_unknown(spec, {});
      return gen_bimodal_met(spec.n, spec.seed, spec.burn_in.value_or(50000));
    case SeriesKind::StepoutLogVar:
      reject_unknown(spec, {});
      return gen_stepout_logvar(spec.n, spec.seed, spec.burn_in.value_or(50000));
    case SeriesKind::StepoutVar: {
      reject_unknown(spec, {});
      auto ts = exp_transform(gen_stepout_logvar(spec.n, spec.seed,
                                                 spec.burn_in.value_or(50000)));
      ts.set_meta("kind", std::string(to_string(SeriesKind::StepoutVar)));
      return ts;
    }
  }
  throw ConfigError("unhandled series kind");
}

namespace {

double ar1_tau_closed_form(double phi) { return (1.0 + phi) / (1.0 - phi); }

double ar2_tau_closed_form(double phi1, double phi2) {
  const double rho1 = phi1 / (1.0 - phi2);
  const double rho2 = phi1 * rho1 + phi2;
  const double gain = 1.0 - phi1 - phi2;
  return (1.0 - rho1 * phi1 - rho2 * phi2) / (gain * gain);
}

} // namespace

TruthRecord truth_table(SeriesKind kind) {
  TruthRecord rec;
  rec.kind = kind;
  switch (kind) {
    case SeriesKind::Ar1:
      rec.tau_true = ar1_tau_closed_form(0.98); // 99
      rec.provenance = TruthProvenance::Analytic;
      rec.oracle_detail = "(1+phi)/(1-phi) at phi=0.98";
      break;
    case SeriesKind::Ar2:
      rec.tau_true = ar2_tau_closed_form(1.98, -0.99); // 397/199
      rec.provenance = TruthProvenance::Analytic;
      rec.oracle_detail = "AR tau formula at (1.98, -0.99)";
      break;
    case SeriesKind::Ar1Arch1:
      // ARCH innovations are uncorrelated, so the autocorrelation function
      // (and tau) match the plain AR(1) with phi = 0.98.
      rec.tau_true = ar1_tau_closed_form(0.98);
      rec.provenance = TruthProvenance::Analytic;
      rec.oracle_detail = "martingale-difference errors leave the AR(1) ACF unchanged";
      break;
    case SeriesKind::MetGauss:
      rec.tau_true = 7.98; // tools/calibrate.sh, 10 chains of n=2e6
      rec.provenance = TruthProvenance::OracleEstimated;
      rec.oracle_detail = "median batch-means tau over 10 chains of n=2e6";
      break;
    case SeriesKind::BimodalMet:
      rec.tau_true = 202.7; // tools/calibrate.sh, 8 chains of n=2e6
      rec.provenance = TruthProvenance::OracleEstimated;
      rec.oracle_detail = "median batch-means tau over 8 chains of n=2e6";
      break;
    case SeriesKind::StepoutLogVar:
      rec.tau_true = 213.3; // tools/calibrate.sh, 8 chains of n=2e6
      rec.provenance = TruthProvenance::OracleEstimated;
      rec.oracle_detail = "median batch-means tau over 8 chains of n=2e6";
      break;
    case SeriesKind::StepoutVar:
      rec.tau_true = 139.1; // tools/calibrate.sh, 8 chains of n=2e6
      rec.provenance = TruthProvenance::OracleEstimated;
      rec.oracle_detail = "median batch-means tau over 8 chains of n=2e6";
      break;
  }
  return rec;
}

TruthRecord oracle_tau(const SeriesSpec& spec, std::size_t oracle_n, std::size_t replicates) {
  switch (spec.kind) {
    case SeriesKind::Ar1: {
      TruthRecord rec = truth_table(spec.kind);
      const double phi = require(spec.params, "phi", 0.98);
      rec.tau_true = ar1_tau_closed_form(phi);
      rec.oracle_detail = "(1+phi)/(1-phi) at phi=" + detail::format_double(phi);
      return rec;
    }
    case SeriesKind::Ar2: {
      TruthRecord rec = truth_table(spec.kind);
      const double phi1 = require(spec.params, "phi1", 1.98);
      const double phi2 = require(spec.params, "phi2", -0.99);
      rec.tau_true = ar2_tau_closed_form(phi1, phi2);
      rec.oracle_detail = "AR tau formula at (" + detail::format_double(phi1) + ", " +
                          detail::format_double(phi2) + ")";
      return rec;
    }
    case SeriesKind::Ar1Arch1:
      return truth_table(spec.kind);
    default:
      break;
  }

  if (replicates < 1)
    throw ConfigError("oracle needs at least one replicate");
  std::vector<double> taus;
  taus.reserve(replicates);
  for (std::size_t r = 0; r < replicates; ++r) {
    SeriesSpec rep = spec;
    rep.n = oracle_n;
    rep.seed = mix_seed(spec.seed, r + 1);
    taus.push_back(batch_means_tau(generate(rep)).tau);
  }
  TruthRecord rec;
  rec.kind = spec.kind;
  rec.tau_true = median_of(taus);
  rec.provenance = TruthProvenance::OracleEstimated;
  const auto [lo, hi] = std::minmax_element(taus.begin(), taus.end());
  rec.oracle_detail = "batch-means median over " + std::to_string(replicates) +
                      " chains of n=" + std::to_string(oracle_n) + ", range [" +
                      detail::format_double(*lo) + ", " + detail::format_double(*hi) + "]";
  return rec;
}

} // namespace actime
