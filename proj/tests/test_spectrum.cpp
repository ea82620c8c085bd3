#include <doctest.h>

#include <cmath>
#include <vector>

#include "actime/generators.hpp"
#include "actime/spectrum.hpp"
#include "actime/stats.hpp"
#include "helpers.hpp"

using namespace actime;
using namespace actime::testing;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("periodogram frequencies and sizes") {
  const auto pg = periodogram(iid_normal(101, 1));
  REQUIRE(pg.freqs.size() == 50); // floor((n-1)/2)
  CHECK(pg.freqs.front() == doctest::Approx(1.0 / 101).epsilon(1e-12));
  CHECK(pg.freqs.back() == doctest::Approx(50.0 / 101).epsilon(1e-12));
  for (double p : pg.power) CHECK(p >= 0.0);

  CHECK_THROWS_AS(periodogram(iid_normal(7, 1)), TooShort);
  CHECK_THROWS_AS(periodogram(TimeSeries(std::vector<double>(64, 1.0))),
                  DegenerateSeries);
}

TEST_CASE("pure cosine concentrates at its Fourier bin") {
  const std::size_t n = 64, k = 5;
  std::vector<double> x(n);
  for (std::size_t t = 0; t < n; ++t)
    x[t] = std::cos(kTwoPi * static_cast<double>(k * t) / static_cast<double>(n));
  const auto pg = periodogram(TimeSeries(std::move(x)));
  const double peak = pg.power[k - 1];
  CHECK(peak > 0.0);
  for (std::size_t j = 0; j < pg.power.size(); ++j) {
    if (j == k - 1) continue;
    CHECK(pg.power[j] < 1e-10 * peak);
  }
}

// Parseval: with I = |DFT of centered series|^2 / n over the positive
// frequencies, sum_j 2 I_j / n recovers s^2 minus the DC and (even n)
// Nyquist terms, each |DFT|^2 / n^2.
TEST_CASE("periodogram satisfies the Parseval identity") {
  for (std::size_t n : {1001u, 1024u}) {
    const auto series = iid_normal(n, 3 + n);
    const auto pg = periodogram(series);
    const double m = mean(series);

    double sum = 0.0;
    for (double p : pg.power) sum += 2.0 * p / static_cast<double>(n);

    double dc = 0.0, nyq = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      dc += series[t] - m;
      if (n % 2 == 0) nyq += (t % 2 == 0 ? 1.0 : -1.0) * (series[t] - m);
    }
    sum += dc * dc / static_cast<double>(n * n);
    if (n % 2 == 0) sum += nyq * nyq / static_cast<double>(n * n);

    CHECK(sum == doctest::Approx(variance(series)).epsilon(1e-8));
  }
}

TEST_CASE("iid periodogram has flat mean equal to the variance") {
  const std::size_t n = 1 << 14;
  const auto pg = periodogram(iid_normal(n, 9));
  double acc = 0.0;
  for (double p : pg.power) acc += p;
  // E I(f) = s^2 for white noise under the 1/n scaling.
  CHECK(acc / static_cast<double>(pg.power.size()) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("iid series yields tau near one") {
  const auto est = spectrum_fit_tau(iid_normal(100000, 21), 1);
  CHECK(est.tau > 0.6);
  CHECK(est.tau < 1.7);
  CHECK(est.detail.at("n_points") == 316); // floor(sqrt(1e5))
}

TEST_CASE("AR(1) tau is recovered at large n") {
  std::vector<double> taus;
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    taus.push_back(spectrum_fit_tau(gen_ar1(500000, 0.98, seed), 1).tau);
  const double med = median(taus);
  CHECK(med > 60.0);
  CHECK(med < 150.0);
}

TEST_CASE("too few low frequencies fails explicitly") {
  CHECK_THROWS_AS(spectrum_fit_tau(iid_normal(10, 2), 1), FailedEstimate);
  CHECK_THROWS_AS(spectrum_fit_tau(iid_normal(10, 2), 2), FailedEstimate);
  // Enough frequencies for order 1 at n = 20: floor(sqrt(20)) = 4 points.
  CHECK_NOTHROW(spectrum_fit_tau(iid_normal(20, 2), 1));
}

TEST_CASE("tau is scale and location invariant") {
  const auto series = gen_ar1(20000, 0.9, 4);
  const double base = spectrum_fit_tau(series, 1).tau;
  CHECK(spectrum_fit_tau(affine(series, 3.0, 0.0), 1).tau ==
        doctest::Approx(base).epsilon(1e-10));
  CHECK(spectrum_fit_tau(affine(series, 1.0, -7.0), 1).tau ==
        doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("fit exposes its coefficients and intercept") {
  const auto fit = spectrum_fit(iid_normal(5000, 8), 2);
  REQUIRE(fit.coeffs.size() == 3);
  CHECK(fit.i0_hat == doctest::Approx(std::exp(fit.coeffs[0])).epsilon(1e-12));
  CHECK(fit.order == 2);
  CHECK(fit.n_points >= 4);
}
