// Command line front end: generate benchmark series, estimate
// autocorrelation times, run length sweeps and render the results.

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actime/ar_process.hpp"
#include "actime/batch_means.hpp"
#include "actime/generators.hpp"
#include "actime/initial_seq.hpp"
#include "actime/series_io.hpp"
#include "actime/spectrum.hpp"
#include "actime/stats.hpp"
#include "actime/svg_plot.hpp"
#include "actime/sweep.hpp"

namespace fs = std::filesystem;
using namespace actime;

namespace {

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> params;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--param expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    double v = 0.0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size())
      throw ConfigError("--param " + key + ": bad value '" + value + "'");
    params[key] = v;
  }
  return params;
}

void print_estimate(const TauEstimate& est) {
  std::cout << "method = " << to_string(est.method) << '\n'
            << "n = " << est.n_used << '\n'
            << "tau = " << est.tau << '\n';
  for (const auto& [key, value] : est.detail)
    std::cout << key << " = " << value << '\n';
}

int run_generate(const std::string& kind_name, std::size_t n, std::uint64_t seed,
                 const std::vector<std::string>& params,
                 std::optional<std::size_t> burn_in, const fs::path& out,
                 const std::optional<fs::path>& csv) {
  SeriesSpec spec;
  spec.kind = series_kind_from_string(kind_name);
  spec.n = n;
  spec.seed = seed;
  spec.params = parse_params(params);
  spec.burn_in = burn_in;

  const TimeSeries series = generate(spec);
  save_series(series, out);
  save_metadata(series, fs::path(out).concat(".meta.json"));
  if (csv) save_series_csv(series, *csv);
  std::cout << "wrote " << out.string() << " (" << series.size() << " values)\n";
  return 0;
}

struct EstimateOptions {
  fs::path in;
  std::string method = "ar";
  std::optional<std::size_t> batch_size;
  int order = 1;
  std::optional<double> ci_level;
  std::size_t draws = 1000;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_order;
  std::optional<fs::path> dump_periodogram;
  std::optional<fs::path> dump_gamma;
};

int run_estimate(const EstimateOptions& opt) {
  const TimeSeries series = load_series(opt.in);
  const Method method = method_from_string(opt.method);

  if (opt.dump_periodogram) {
    const Periodogram pg = periodogram(series);
    std::ofstream out(*opt.dump_periodogram);
    if (!out)
      throw IoError("cannot write " + opt.dump_periodogram->string());
    out << "freq,power\n";
    for (std::size_t j = 0; j < pg.freqs.size(); ++j)
      out << pg.freqs[j] << ',' << pg.power[j] << '\n';
  }
  if (opt.dump_gamma) {
    if (method != Method::Ips && method != Method::Ims && method != Method::Ics)
      throw ConfigError("--dump-gamma applies to ips, ims or ics only");
    const auto pairs = gamma_pairs(sample_acf(series, series.size() - 2));
    const auto smoothed = smoothed_gamma(pairs, method);
    std::ofstream out(*opt.dump_gamma);
    if (!out)
      throw IoError("cannot write " + opt.dump_gamma->string());
    out << "m,gamma_raw,gamma_smoothed\n";
    for (std::size_t m = 0; m < pairs.gamma.size(); ++m)
      out << m << ',' << pairs.gamma[m] << ',' << smoothed[m] << '\n';
  }

  switch (method) {
    case Method::BatchMeans: {
      std::optional<BatchPlan> plan;
      if (opt.batch_size)
        plan = BatchPlan::with_batch_size(series.size(), *opt.batch_size);
      print_estimate(batch_means_tau(series, plan));
      break;
    }
    case Method::SpectrumFit:
      print_estimate(spectrum_fit_tau(series, opt.order));
      break;
    case Method::Ips:
      print_estimate(ips_tau(series));
      break;
    case Method::Ims:
      print_estimate(ims_tau(series));
      break;
    case Method::Ics:
      print_estimate(ics_tau(series));
      break;
    case Method::ArProcess: {
      if (opt.ci_level) {
        const TauInterval interval = ar_tau_ci(series, *opt.ci_level, opt.draws,
                                               opt.seed, std::nullopt, opt.max_order);
        print_estimate(interval.estimate);
        std::cout << "lower = " << interval.lower << '\n'
                  << "upper = " << interval.upper << '\n'
                  << "level = " << interval.level << '\n'
                  << "n_draws = " << interval.n_draws << '\n'
                  << "n_rejected = " << interval.n_rejected << '\n';
      } else {
        print_estimate(ar_tau(series, std::nullopt, opt.max_order));
      }
      break;
    }
  }
  return 0;
}

int run_sweep_cmd(const std::optional<fs::path>& config_path, const fs::path& out_dir,
                  std::size_t jobs, bool timings, bool ci_flag) {
  SweepConfig config =
      config_path ? parse_sweep_config(*config_path) : default_sweep_config();
  config.jobs = jobs;
  if (ci_flag) config.ci = true;
  config.output_dir = out_dir;

  fs::create_directories(out_dir);
  const SweepResult result = config.ci ? run_ci_sweep(config) : run_sweep(config);
  const fs::path csv = out_dir / "results.csv";
  emit_csv(result, csv, timings);

  std::size_t failures = 0;
  for (const auto& row : result.rows)
    if (row.status != "ok") ++failures;
  std::cout << "wrote " << csv.string() << ": " << result.rows.size() << " rows, "
            << failures << " failed cells\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Autocorrelation time estimation toolkit"};
  app.require_subcommand(1);

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Generate a benchmark series");
  std::string gen_kind;
  std::size_t gen_n = 1000;
  std::uint64_t gen_seed = 0;
  std::vector<std::string> gen_params;
  std::optional<std::size_t> gen_burn_in;
  fs::path gen_out;
  std::optional<fs::path> gen_csv;
  generate_cmd->add_option("--kind", gen_kind,
                           "ar1|ar2|ar1-arch1|met-gauss|bimodal-met|stepout-logvar|stepout-var")
      ->required();
  generate_cmd->add_option("--n", gen_n, "series length")->required();
  generate_cmd->add_option("--seed", gen_seed, "RNG seed");
  generate_cmd->add_option("--param", gen_params, "key=value parameter override")
      ->take_all();
  generate_cmd->add_option("--burn-in", gen_burn_in, "discarded initial steps");
  generate_cmd->add_option("--out", gen_out, "output file (one value per line)")
      ->required();
  generate_cmd->add_option("--csv", gen_csv, "also write an index,value CSV");

  // estimate
  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate tau for a series file");
  EstimateOptions est;
  estimate_cmd->add_option("--in", est.in, "series file, one value per line")->required();
  estimate_cmd->add_option("--method", est.method,
                           "batch-means|spectrum-fit|ips|ims|ics|ar")
      ->required();
  estimate_cmd->add_option("--batch-size", est.batch_size, "batch means: fixed batch size");
  estimate_cmd->add_option("--order", est.order, "spectrum fit: polynomial order (1|2)");
  estimate_cmd->add_option("--ci", est.ci_level, "ar: confidence level in (0,1)");
  estimate_cmd->add_option("--draws", est.draws, "ar: Monte Carlo draws for the interval");
  estimate_cmd->add_option("--seed", est.seed, "ar: Monte Carlo seed");
  estimate_cmd->add_option("--max-order", est.max_order, "ar: AIC search bound");
  estimate_cmd->add_option("--dump-periodogram", est.dump_periodogram,
                           "write freq,power CSV");
  estimate_cmd->add_option("--dump-gamma", est.dump_gamma,
                           "write m,gamma_raw,gamma_smoothed CSV");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the length-vs-method grid");
  std::optional<fs::path> sweep_config;
  fs::path sweep_out;
  std::size_t sweep_jobs = 1;
  bool sweep_timings = false;
  bool sweep_ci = false;
  sweep_cmd->add_option("--config", sweep_config, "key = value config file");
  sweep_cmd->add_option("--out", sweep_out, "output directory")->required();
  sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads");
  sweep_cmd->add_flag("--timings", sweep_timings,
                      "include wall times in the CSV (breaks rerun byte-identity)");
  sweep_cmd->add_flag("--ci", sweep_ci, "ArProcess interval sweep");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Render a results CSV as SVG panels");
  fs::path plot_in, plot_out;
  plot_cmd->add_option("--in", plot_in, "results.csv from sweep")->required();
  plot_cmd->add_option("--out", plot_out, "output directory")->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Reference tau for a series kind");
  std::string oracle_kind;
  std::size_t oracle_n = 1000000;
  std::size_t oracle_reps = 5;
  std::uint64_t oracle_seed = 0;
  std::vector<std::string> oracle_params;
  oracle_cmd->add_option("--kind", oracle_kind, "series kind")->required();
  oracle_cmd->add_option("--n", oracle_n, "chain length per replicate");
  oracle_cmd->add_option("--replicates", oracle_reps, "number of replicate chains");
  oracle_cmd->add_option("--seed", oracle_seed, "base seed");
  oracle_cmd->add_option("--param", oracle_params, "key=value parameter override")
      ->take_all();

  // acf
  auto* acf_cmd = app.add_subcommand("acf", "Autocorrelation function report");
  fs::path acf_in, acf_out;
  std::size_t acf_max_lag = 100;
  acf_cmd->add_option("--in", acf_in, "series file")->required();
  acf_cmd->add_option("--max-lag", acf_max_lag, "largest lag");
  acf_cmd->add_option("--out", acf_out, "output CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate_cmd)
      return run_generate(gen_kind, gen_n, gen_seed, gen_params, gen_burn_in, gen_out, gen_csv);
    if (*estimate_cmd)
      return run_estimate(est);
    if (*sweep_cmd)
      return run_sweep_cmd(sweep_config, sweep_out, sweep_jobs, sweep_timings, sweep_ci);
    if (*plot_cmd) {
      fs::create_directories(plot_out);
      const SweepResult result = load_csv(plot_in);
      const fs::path svg = plot_out / "comparison.svg";
      emit_plot(result, svg);
      std::cout << "wrote " << svg.string() << '\n';
      return 0;
    }
    if (*oracle_cmd) {
      SeriesSpec spec;
      spec.kind = series_kind_from_string(oracle_kind);
      spec.seed = oracle_seed;
      spec.params = parse_params(oracle_params);
      const TruthRecord rec = oracle_tau(spec, oracle_n, oracle_reps);
      std::cout << "kind = " << to_string(rec.kind) << '\n'
                << "tau_true = " << rec.tau_true << '\n'
                << "provenance = " << to_string(rec.provenance) << '\n'
                << "detail = " << rec.oracle_detail << '\n';
      return 0;
    }
    if (*acf_cmd) {
      const TimeSeries series = load_series(acf_in);
      const AcfReport report = acf_report(series, acf_max_lag);
      save_acf_report(report, acf_out);
      std::cout << "wrote " << acf_out.string();
      if (report.first_zero_crossing)
        std::cout << " (first zero crossing at lag " << *report.first_zero_crossing << ")";
      std::cout << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
