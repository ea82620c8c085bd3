#include "actime/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "actime/ar_process.hpp"
#include "actime/batch_means.hpp"
#include "actime/initial_seq.hpp"
#include "actime/spectrum.hpp"
#include "actime/stats.hpp"
#include "format.hpp"

namespace actime {

namespace {

// Generator stream for the realization behind a (series position, sweep
// seed) pair. Mixing in the position keeps same-seed streams of different
// series decorrelated.
std::uint64_t series_stream_seed(std::size_t series_index, std::uint64_t sweep_seed) {
  return mix_seed(sweep_seed, 0x5eed0000ULL + series_index);
}

// Monte Carlo stream for one interval cell.
std::uint64_t ci_stream_seed(std::size_t series_index, std::uint64_t sweep_seed,
                             std::size_t length) {
  return mix_seed(mix_seed(sweep_seed, 0xC1000000ULL + series_index), length);
}

TauEstimate run_method(Method method, const TimeSeries& prefix) {
  switch (method) {
    case Method::BatchMeans: return batch_means_tau(prefix);
    case Method::SpectrumFit: return spectrum_fit_tau(prefix);
    case Method::Ips: return ips_tau(prefix);
    case Method::Ims: return ims_tau(prefix);
    case Method::Ics: return ics_tau(prefix);
    case Method::ArProcess: return ar_tau(prefix);
  }
  throw ConfigError("unhandled method");
}

// Run `task(i)` for i in [0, count) on `jobs` workers. Tasks write to
// disjoint slots, so results are identical for any worker count.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& task) {
  jobs = std::max<std::size_t>(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < std::min(jobs, count); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Realizations {
  // indexed by series_index * seeds.size() + seed_index
  std::vector<TimeSeries> series;
};

Realizations generate_realizations(const SweepConfig& config) {
  const std::size_t ns = config.series_specs.size();
  const std::size_t nseeds = config.seeds.size();
  std::vector<std::optional<TimeSeries>> slots(ns * nseeds);
  parallel_for(ns * nseeds, config.jobs, [&](std::size_t i) {
    const std::size_t si = i / nseeds;
    const std::size_t vi = i % nseeds;
    SeriesSpec spec = config.series_specs[si];
    spec.seed = series_stream_seed(si, config.seeds[vi]);
    slots[i] = generate(spec);
  });
  Realizations out;
  out.series.reserve(slots.size());
  for (auto& s : slots) out.series.push_back(std::move(*s));
  return out;
}

void validate(const SweepConfig& config, bool interval_mode) {
  if (config.series_specs.empty() || config.lengths.empty() || config.seeds.empty())
    throw ConfigError("sweep needs at least one series, one length and one seed");
  if (!interval_mode && config.methods.empty())
    throw ConfigError("sweep needs at least one method");
  for (std::size_t i = 1; i < config.lengths.size(); ++i)
    if (config.lengths[i] <= config.lengths[i - 1])
      throw ConfigError("lengths must be strictly increasing");
  for (const auto& spec : config.series_specs)
    if (config.lengths.back() > spec.n)
      throw ConfigError("max sweep length " + std::to_string(config.lengths.back()) +
                        " exceeds series length " + std::to_string(spec.n));
}

SweepResult run_grid(const SweepConfig& config, bool with_intervals) {
  validate(config, with_intervals || config.ci);
  const auto realizations = generate_realizations(config);

  const std::vector<Method> methods =
      with_intervals ? std::vector<Method>{Method::ArProcess} : config.methods;

  const std::size_t ns = config.series_specs.size();
  const std::size_t nm = methods.size();
  const std::size_t nl = config.lengths.size();
  const std::size_t nv = config.seeds.size();

  SweepResult result;
  result.rows.resize(ns * nm * nl * nv);
  for (const auto& spec : config.series_specs)
    result.truth.emplace(spec.kind, truth_table(spec.kind));

  parallel_for(result.rows.size(), config.jobs, [&](std::size_t i) {
    // Canonical order: series, method, length, seed.
    const std::size_t si = i / (nm * nl * nv);
    const std::size_t mi = (i / (nl * nv)) % nm;
    const std::size_t li = (i / nv) % nl;
    const std::size_t vi = i % nv;

    SweepRow row;
    row.series = config.series_specs[si].kind;
    row.method = methods[mi];
    row.length = config.lengths[li];
    row.seed = config.seeds[vi];

    const TimeSeries& full = realizations.series[si * nv + vi];
    const auto start = std::chrono::steady_clock::now();
    try {
      const TimeSeries prefix = full.prefix(row.length);
      if (with_intervals) {
        const TauInterval interval =
            ar_tau_ci(prefix, config.ci_level, config.ci_draws,
                      ci_stream_seed(si, config.seeds[vi], row.length));
        row.tau = interval.estimate.tau;
        row.lower = interval.lower;
        row.upper = interval.upper;
        row.n_rejected = interval.n_rejected;
      } else {
        row.tau = run_method(row.method, prefix).tau;
      }
    } catch (const Error& e) {
      row.status = std::string(to_string(e.code()));
    }
    row.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    result.rows[i] = std::move(row);
  });
  return result;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::stringstream ss(value);
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    items.push_back(item.substr(b, e - b + 1));
  }
  return items;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

double parse_f64(const std::string& s, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

} // namespace

std::vector<std::size_t> log_spaced_lengths(std::size_t lo, std::size_t hi,
                                            std::size_t points) {
  if (lo < 1 || hi < lo || points < 1)
    throw ConfigError("bad length grid parameters");
  std::vector<std::size_t> lengths;
  const double la = std::log(static_cast<double>(lo));
  const double lb = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0
                                 : static_cast<double>(i) / static_cast<double>(points - 1);
    const auto v = static_cast<std::size_t>(std::llround(std::exp(la + f * (lb - la))));
    if (lengths.empty() || v > lengths.back()) lengths.push_back(v);
  }
  return lengths;
}

SweepConfig default_sweep_config() {
  SweepConfig config;
  for (SeriesKind kind : {SeriesKind::Ar1, SeriesKind::Ar2, SeriesKind::Ar1Arch1,
                          SeriesKind::MetGauss, SeriesKind::BimodalMet,
                          SeriesKind::StepoutLogVar, SeriesKind::StepoutVar}) {
    SeriesSpec spec;
    spec.kind = kind;
    spec.n = 500000;
    config.series_specs.push_back(spec);
  }
  config.lengths = log_spaced_lengths();
  config.methods = {Method::BatchMeans, Method::SpectrumFit, Method::Ics,
                    Method::ArProcess};
  config.seeds = {1, 2, 3};
  return config;
}

SweepConfig parse_sweep_config_text(const std::string& text) {
  SweepConfig config = default_sweep_config();
  bool explicit_lengths = false;
  std::size_t length_min = 10, length_max = 500000, length_points = 20;
  std::optional<std::size_t> chain_n;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto x = s.find_first_not_of(" \t\r");
      const auto y = s.find_last_not_of(" \t\r");
      return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "series") {
      config.series_specs.clear();
      for (const auto& name : split_list(value)) {
        SeriesSpec spec;
        spec.kind = series_kind_from_string(name);
        config.series_specs.push_back(spec);
      }
    } else if (key == "methods") {
      config.methods.clear();
      for (const auto& name : split_list(value))
        config.methods.push_back(method_from_string(name));
    } else if (key == "seeds") {
      config.seeds.clear();
      for (const auto& s : split_list(value)) config.seeds.push_back(parse_u64(s, "seed"));
    } else if (key == "lengths") {
      config.lengths.clear();
      for (const auto& s : split_list(value))
        config.lengths.push_back(parse_u64(s, "length"));
      explicit_lengths = true;
    } else if (key == "length_min") {
      length_min = parse_u64(value, "length_min");
    } else if (key == "length_max") {
      length_max = parse_u64(value, "length_max");
    } else if (key == "length_points") {
      length_points = parse_u64(value, "length_points");
    } else if (key == "n") {
      chain_n = parse_u64(value, "n");
    } else if (key == "ci") {
      if (value == "true" || value == "1")
        config.ci = true;
      else if (value == "false" || value == "0")
        config.ci = false;
      else
        throw ConfigError("bad ci flag: '" + value + "'");
    } else if (key == "ci_level") {
      config.ci_level = parse_f64(value, "ci_level");
    } else if (key == "ci_draws") {
      config.ci_draws = parse_u64(value, "ci_draws");
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }

  if (!explicit_lengths)
    config.lengths = log_spaced_lengths(length_min, length_max, length_points);
  for (auto& spec : config.series_specs)
    spec.n = chain_n.value_or(config.lengths.empty() ? 0 : config.lengths.back());
  validate(config, config.ci);
  return config;
}

SweepConfig parse_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config_text(buf.str());
}

SweepResult run_sweep(const SweepConfig& config) { return run_grid(config, false); }

SweepResult run_ci_sweep(const SweepConfig& config) { return run_grid(config, true); }

void emit_csv(const SweepResult& result, const std::filesystem::path& path,
              bool include_timings) {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << "series,method,length,seed,tau,lower,upper,status,ms\n";
  for (const auto& row : result.rows) {
    out << to_string(row.series) << ',' << to_string(row.method) << ','
        << row.length << ',' << row.seed << ',';
    if (row.tau) out << detail::format_double(*row.tau);
    out << ',';
    if (row.lower) out << detail::format_double(*row.lower);
    out << ',';
    if (row.upper) out << detail::format_double(*row.upper);
    out << ',' << row.status << ',';
    if (include_timings) out << detail::format_double(row.ms);
    out << '\n';
  }
  if (!out)
    throw IoError("write failed for " + path.string());
}

SweepResult load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path.string());
  SweepResult result;
  std::string line;
  if (!std::getline(in, line))
    throw IoError(path.string() + ": empty file");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    // Field-preserving split: empty cells are meaningful here.
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    while (fields.size() < 9) fields.emplace_back();
    SweepRow row;
    row.series = series_kind_from_string(fields[0]);
    row.method = method_from_string(fields[1]);
    row.length = parse_u64(fields[2], "length");
    row.seed = parse_u64(fields[3], "seed");
    if (!fields[4].empty()) row.tau = parse_f64(fields[4], "tau");
    if (!fields[5].empty()) row.lower = parse_f64(fields[5], "lower");
    if (!fields[6].empty()) row.upper = parse_f64(fields[6], "upper");
    row.status = fields[7];
    if (!fields[8].empty()) row.ms = parse_f64(fields[8], "ms");
    result.rows.push_back(std::move(row));
    if (!result.truth.count(result.rows.back().series))
      result.truth.emplace(result.rows.back().series,
                           truth_table(result.rows.back().series));
  }
  return result;
}

AcfReport acf_report(const TimeSeries& series, std::size_t max_lag) {
  const AcfVector acf = sample_acf(series, max_lag);
  AcfReport report;
  report.rho = acf.rho;
  for (std::size_t k = 1; k < report.rho.size(); ++k) {
    if (report.rho[k] <= 0.0) {
      report.first_zero_crossing = k;
      break;
    }
  }
  return report;
}

void save_acf_report(const AcfReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path.string());
  if (report.first_zero_crossing)
    out << "# first_zero_crossing," << *report.first_zero_crossing << '\n';
  out << "lag,rho\n";
  for (std::size_t k = 0; k < report.rho.size(); ++k)
    out << k << ',' << detail::format_double(report.rho[k]) << '\n';
  if (!out)
    throw IoError("write failed for " + path.string());
}

} // namespace actime
