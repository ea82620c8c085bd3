#ifndef ACTIME_SWEEP_HPP
#define ACTIME_SWEEP_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actime/estimate.hpp"
#include "actime/generators.hpp"
#include "actime/time_series.hpp"

namespace actime {

/// Grid of (series, method, subsequence length, seed) cells.
///
/// Every estimator runs on prefix(series, length) of one realization per
/// (series, seed); the generator stream for that realization is derived
/// from the listed seed and the series position, so results do not depend
/// on evaluation order or worker count.
struct SweepConfig {
  std::vector<SeriesSpec> series_specs;
  std::vector<std::size_t> lengths; // strictly increasing
  std::vector<Method> methods;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_dir;

  bool ci = false; // run the ArProcess interval sweep instead
  double ci_level = 0.95;
  std::size_t ci_draws = 1000;
  std::size_t jobs = 1;
};

/// 20 log-spaced subsequence lengths from `lo` to `hi` (duplicates after
/// rounding are merged).
std::vector<std::size_t> log_spaced_lengths(std::size_t lo = 10,
                                            std::size_t hi = 500000,
                                            std::size_t points = 20);

/// All seven series, the four headline methods, seeds {1,2,3}, default
/// lengths.
SweepConfig default_sweep_config();

/// Flat `key = value` text file (see README for the key list). Throws
/// ConfigError on unknown keys or inconsistent grids.
SweepConfig parse_sweep_config(const std::filesystem::path& path);
SweepConfig parse_sweep_config_text(const std::string& text);

/// One cell of the sweep. Failures are recorded, never propagated: a row
/// exists for every cell and `status` is "ok" or an error code.
struct SweepRow {
  SeriesKind series = SeriesKind::Ar1;
  Method method = Method::BatchMeans;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::optional<double> tau;
  std::optional<double> lower, upper; // interval sweeps only
  std::size_t n_rejected = 0;         // interval sweeps only
  std::string status = "ok";
  double ms = 0.0; // wall time; excluded from canonical CSV output
};

struct SweepResult {
  std::vector<SweepRow> rows; // canonical (series, method, length, seed) order
  std::map<SeriesKind, TruthRecord> truth;
};

SweepResult run_sweep(const SweepConfig& config);

/// ArProcess-only sweep with percentile confidence intervals per cell.
SweepResult run_ci_sweep(const SweepConfig& config);

/// Canonical CSV: header `series,method,length,seed,tau,lower,upper,status,ms`.
/// The ms field is left empty unless include_timings is set, so that
/// reruns of the same config are byte-identical.
void emit_csv(const SweepResult& result, const std::filesystem::path& path,
              bool include_timings = false);

/// Inverse of emit_csv, for plotting previously saved results.
SweepResult load_csv(const std::filesystem::path& path);

/// Lag-by-lag autocorrelation table. first_zero_crossing is the smallest
/// lag with a nonpositive autocorrelation, if any.
struct AcfReport {
  std::vector<double> rho; // indexed by lag 0..max_lag
  std::optional<std::size_t> first_zero_crossing;
};

AcfReport acf_report(const TimeSeries& series, std::size_t max_lag);

/// CSV `lag,rho` preceded by a `# first_zero_crossing,K` comment when a
/// crossing exists.
void save_acf_report(const AcfReport& report, const std::filesystem::path& path);

} // namespace actime

#endif // ACTIME_SWEEP_HPP
