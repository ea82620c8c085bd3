#ifndef ACTIME_GENERATORS_HPP
#define ACTIME_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "actime/rng.hpp"
#include "actime/time_series.hpp"

namespace actime {

enum class SeriesKind {
  Ar1,           // X_t = 0.98 X_{t-1} + a_t, tau = 99
  Ar2,           // X_t = 1.98 X_{t-1} - 0.99 X_{t-2} + a_t, tau = 397/199
  Ar1Arch1,      // AR(1) with ARCH(1) errors, tau = 99
  MetGauss,      // random-walk Metropolis on N(0,1), tau ~= 8
  BimodalMet,    // badly tuned Metropolis on a two-Gaussian mixture, tau ~= 200
  StepoutLogVar, // log-variance of a hierarchical model under slice sampling
  StepoutVar,    // exp of StepoutLogVar
};

std::string_view to_string(SeriesKind kind) noexcept;
SeriesKind series_kind_from_string(std::string_view name); // throws ConfigError

/// Request for one realization. `params` overrides the per-kind defaults
/// (keys as accepted by the corresponding generator, e.g. "phi" for Ar1,
/// "proposal_sd" for MetGauss); unknown keys throw ConfigError.
struct SeriesSpec {
  SeriesKind kind = SeriesKind::Ar1;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
  std::optional<std::size_t> burn_in; // default depends on kind
};

/// Dispatch on spec.kind. Identical specs yield bitwise-identical series.
TimeSeries generate(const SeriesSpec& spec);

// The individual generators. Each stamps kind, parameters, burn-in, the
// RNG algorithm name and any sampler diagnostics into the series metadata.
TimeSeries gen_ar1(std::size_t n, double phi, std::uint64_t seed);
TimeSeries gen_ar2(std::size_t n, double phi1, double phi2, std::uint64_t seed,
                   std::size_t burn_in = 10000);
TimeSeries gen_ar1_arch1(std::size_t n, std::uint64_t seed, std::size_t burn_in = 10000);
TimeSeries gen_met_gauss(std::size_t n, double proposal_sd, std::uint64_t seed,
                         std::size_t burn_in = 10000);
TimeSeries gen_bimodal_met(std::size_t n, std::uint64_t seed, std::size_t burn_in = 50000);
TimeSeries gen_stepout_logvar(std::size_t n, std::uint64_t seed, std::size_t burn_in = 50000);

/// Elementwise exponential; throws Overflow if any exp(x) is non-finite.
TimeSeries exp_transform(const TimeSeries& series);

/// CDF of the two-Gaussian mixture BimodalMet samples from, for
/// goodness-of-fit checks against the chain's long-run distribution.
double bimodal_target_cdf(double x);

/// Proposal scale used by MetGauss by default; calibrated so the long-run
/// autocorrelation time is 8 +- 1 (see tools/calibrate.sh to redo this).
inline constexpr double kMetGaussProposalSd = 1.0;

/// One step of univariate slice sampling with stepping out and shrinkage
/// (Neal 2003, figs. 3 and 5). max_stepout bounds the interval to
/// max_stepout * width as in the published procedure; the default expands
/// until the slice is bracketed. Exposed for direct testing.
double slice_sample_step(double x0, const std::function<double(double)>& log_density,
                         double width, Rng& rng,
                         std::size_t max_stepout = static_cast<std::size_t>(-1));

enum class TruthProvenance { Analytic, PaperStated, OracleEstimated };

std::string_view to_string(TruthProvenance p) noexcept;

/// Reference autocorrelation time for a benchmark series.
struct TruthRecord {
  SeriesKind kind = SeriesKind::Ar1;
  double tau_true = 1.0;
  TruthProvenance provenance = TruthProvenance::Analytic;
  std::string oracle_detail;
};

/// Stored reference values: closed forms for the AR kinds, frozen long-run
/// batch-means medians for the MCMC kinds.
TruthRecord truth_table(SeriesKind kind);

/// Recompute a truth record: closed form where one exists, otherwise the
/// median batch-means estimate over `replicates` chains of length oracle_n.
TruthRecord oracle_tau(const SeriesSpec& spec, std::size_t oracle_n,
                       std::size_t replicates);

} // namespace actime

#endif // ACTIME_GENERATORS_HPP
