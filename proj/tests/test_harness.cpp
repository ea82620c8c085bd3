#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "actime/generators.hpp"
#include "actime/svg_plot.hpp"
#include "actime/sweep.hpp"
#include "helpers.hpp"

using namespace actime;
using namespace actime::testing;

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

SweepConfig tiny_config() {
  SweepConfig config;
  SeriesSpec ar1;
  ar1.kind = SeriesKind::Ar1;
  ar1.n = 4000;
  SeriesSpec gauss;
  gauss.kind = SeriesKind::MetGauss;
  gauss.n = 4000;
  gauss.burn_in = 500;
  config.series_specs = {ar1, gauss};
  config.methods = {Method::BatchMeans, Method::Ics};
  config.lengths = {100, 1000, 4000};
  config.seeds = {1, 2};
  return config;
}

} // namespace

TEST_CASE("log-spaced default length grid") {
  const auto lengths = log_spaced_lengths();
  CHECK(lengths.size() == 20);
  CHECK(lengths.front() == 10);
  CHECK(lengths.back() == 500000);
  for (std::size_t i = 1; i < lengths.size(); ++i) CHECK(lengths[i] > lengths[i - 1]);
}

TEST_CASE("config text parsing") {
  const auto config = parse_sweep_config_text(
      "# comment\n"
      "series = ar1, met-gauss\n"
      "methods = batch-means, ar\n"
      "seeds = 5, 6, 7\n"
      "length_min = 10\nlength_max = 1000\nlength_points = 5\n"
      "n = 2000\n");
  CHECK(config.series_specs.size() == 2);
  CHECK(config.series_specs[1].kind == SeriesKind::MetGauss);
  CHECK(config.methods == std::vector<Method>{Method::BatchMeans, Method::ArProcess});
  CHECK(config.seeds == std::vector<std::uint64_t>{5, 6, 7});
  CHECK(config.lengths.size() == 5);
  CHECK(config.lengths.back() == 1000);
  CHECK(config.series_specs[0].n == 2000);

  CHECK_THROWS_AS(parse_sweep_config_text("bogus_key = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("series = updown\n"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("seeds = x\n"), ConfigError);
  CHECK_THROWS_AS(parse_sweep_config_text("lengths = 10, 10\nn = 100\n"), ConfigError);
}

TEST_CASE("single cell sweep") {
  SweepConfig config;
  SeriesSpec spec;
  spec.kind = SeriesKind::Ar1;
  spec.n = 1000;
  config.series_specs = {spec};
  config.methods = {Method::BatchMeans};
  config.lengths = {1000};
  config.seeds = {1};
  const auto result = run_sweep(config);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].status == "ok");
  CHECK(result.rows[0].tau.has_value());
  CHECK(result.truth.at(SeriesKind::Ar1).tau_true == doctest::Approx(99.0));
}

TEST_CASE("every grid cell produces exactly one row") {
  const auto result = run_sweep(tiny_config());
  CHECK(result.rows.size() == 2 * 2 * 3 * 2);
  for (const auto& row : result.rows) {
    const bool ok = row.status == "ok";
    CHECK(ok == row.tau.has_value()); // failures have explicit status, no tau
  }
}

TEST_CASE("estimator failures are rows, not exceptions") {
  SweepConfig config;
  SeriesSpec spec;
  spec.kind = SeriesKind::Ar1;
  spec.n = 1000;
  config.series_specs = {spec};
  config.methods = {Method::SpectrumFit};
  config.lengths = {10, 1000};
  config.seeds = {1};
  const auto result = run_sweep(config);
  REQUIRE(result.rows.size() == 2);
  CHECK(result.rows[0].status == "failed-estimate");
  CHECK(!result.rows[0].tau.has_value());
  CHECK(result.rows[1].status == "ok");
}

TEST_CASE("csv output is stable and canonical") {
  const fs::path dir = fs::temp_directory_path() / "actime_sweep_test";
  fs::create_directories(dir);

  SUBCASE("empty result gives a header-only file") {
    SweepResult empty;
    emit_csv(empty, dir / "empty.csv");
    CHECK(read_file(dir / "empty.csv") ==
          "series,method,length,seed,tau,lower,upper,status,ms\n");
  }

  SUBCASE("reruns and worker counts do not change the bytes") {
    auto config = tiny_config();
    config.jobs = 1;
    emit_csv(run_sweep(config), dir / "a.csv");
    emit_csv(run_sweep(config), dir / "b.csv");
    config.jobs = 4;
    emit_csv(run_sweep(config), dir / "c.csv");
    const auto a = read_file(dir / "a.csv");
    CHECK(a == read_file(dir / "b.csv"));
    CHECK(a == read_file(dir / "c.csv"));
    CHECK(count_occurrences(a, "\n") == 1 + 24);
  }

  SUBCASE("csv round-trips through load_csv") {
    const auto result = run_sweep(tiny_config());
    emit_csv(result, dir / "r.csv");
    const auto loaded = load_csv(dir / "r.csv");
    REQUIRE(loaded.rows.size() == result.rows.size());
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      CHECK(loaded.rows[i].series == result.rows[i].series);
      CHECK(loaded.rows[i].method == result.rows[i].method);
      CHECK(loaded.rows[i].length == result.rows[i].length);
      CHECK(loaded.rows[i].seed == result.rows[i].seed);
      CHECK(loaded.rows[i].status == result.rows[i].status);
      if (result.rows[i].tau)
        CHECK(*loaded.rows[i].tau == *result.rows[i].tau); // shortest round-trip form
    }
  }

  fs::remove_all(dir);
}

TEST_CASE("interval sweep rows carry ordered bounds") {
  SweepConfig config;
  SeriesSpec spec;
  spec.kind = SeriesKind::Ar1;
  spec.n = 4000;
  config.series_specs = {spec};
  config.lengths = {500, 4000};
  config.seeds = {1, 2};
  config.ci_draws = 200;
  const auto result = run_ci_sweep(config);
  REQUIRE(result.rows.size() == 4);
  for (const auto& row : result.rows) {
    REQUIRE(row.status == "ok");
    REQUIRE(row.lower.has_value());
    CHECK(*row.lower <= *row.upper);
    CHECK(row.method == Method::ArProcess);
  }
}

TEST_CASE("acf report finds the AR(2) zero crossing") {
  const auto report = acf_report(gen_ar2(500000, 1.98, -0.99, 3), 200);
  REQUIRE(report.first_zero_crossing.has_value());
  // Quarter of the ~63-step oscillation period.
  CHECK(*report.first_zero_crossing >= 11);
  CHECK(*report.first_zero_crossing <= 21);
  // Beyond the crossing the autocorrelation swings far negative.
  CHECK(*std::min_element(report.rho.begin(), report.rho.end()) < -0.5);
}

TEST_CASE("white noise autocorrelations stay inside the Bartlett band") {
  const std::size_t n = 10000, lags = 100;
  const auto report = acf_report(iid_normal(n, 33), lags);
  std::size_t inside = 0;
  for (std::size_t k = 1; k <= lags; ++k)
    if (std::abs(report.rho[k]) < 3.0 / std::sqrt(static_cast<double>(n))) ++inside;
  CHECK(inside >= 99);
}

TEST_CASE("acf report file format") {
  const fs::path dir = fs::temp_directory_path() / "actime_acf_test";
  fs::create_directories(dir);
  const auto report = acf_report(gen_ar2(20000, 1.98, -0.99, 1), 50);
  save_acf_report(report, dir / "acf.csv");
  const auto text = read_file(dir / "acf.csv");
  CHECK(text.find("# first_zero_crossing,") == 0);
  CHECK(text.find("lag,rho\n") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("svg plot layout") {
  const fs::path dir = fs::temp_directory_path() / "actime_plot_test";
  fs::create_directories(dir);

  SUBCASE("single cell gives one panel with a reference line") {
    SweepResult result;
    SweepRow row;
    row.series = SeriesKind::Ar1;
    row.method = Method::BatchMeans;
    row.length = 1000;
    row.seed = 1;
    row.tau = 42.0;
    result.rows = {row};
    result.truth.emplace(SeriesKind::Ar1, truth_table(SeriesKind::Ar1));
    emit_plot(result, dir / "one.svg");
    const auto svg = read_file(dir / "one.svg");
    CHECK(count_occurrences(svg, "class=\"panel\"") == 1);
    CHECK(count_occurrences(svg, "stroke-dasharray") == 1);
  }

  SUBCASE("panel count equals the number of distinct series") {
    const auto result = run_sweep(tiny_config());
    emit_plot(result, dir / "grid.svg");
    CHECK(count_occurrences(read_file(dir / "grid.svg"), "class=\"panel\"") == 2);
  }

  SUBCASE("failures break the polyline") {
    SweepResult result;
    for (std::size_t i = 0; i < 5; ++i) {
      SweepRow row;
      row.series = SeriesKind::Ar1;
      row.method = Method::SpectrumFit;
      row.length = 10 * (i + 1);
      row.seed = 1;
      if (i == 2) {
        row.status = "failed-estimate";
      } else {
        row.tau = 50.0 + static_cast<double>(i);
      }
      result.rows.push_back(row);
    }
    result.truth.emplace(SeriesKind::Ar1, truth_table(SeriesKind::Ar1));
    emit_plot(result, dir / "gaps.svg");
    CHECK(count_occurrences(read_file(dir / "gaps.svg"), "<polyline") == 2);
  }

  SUBCASE("empty result is a config error") {
    SweepResult empty;
    CHECK_THROWS_AS(emit_plot(empty, dir / "nope.svg"), ConfigError);
  }

  fs::remove_all(dir);
}

TEST_CASE("invalid grids are rejected") {
  auto config = tiny_config();
  config.lengths = {100, 100};
  CHECK_THROWS_AS(run_sweep(config), ConfigError);
  config = tiny_config();
  config.lengths = {100, 100000}; // beyond the 4000-long series
  CHECK_THROWS_AS(run_sweep(config), ConfigError);
  config = tiny_config();
  config.methods.clear();
  CHECK_THROWS_AS(run_sweep(config), ConfigError);
}
