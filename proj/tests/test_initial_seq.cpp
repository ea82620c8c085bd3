#include <doctest.h>

#include <cmath>
#include <vector>

#include "actime/generators.hpp"
#include "actime/initial_seq.hpp"
#include "actime/rng.hpp"
#include "helpers.hpp"

using namespace actime;
using namespace actime::testing;

namespace {

AcfVector acf_from(std::vector<double> rho) {
  AcfVector acf;
  acf.rho = std::move(rho);
  acf.n = 1000;
  acf.s2 = 1.0;
  return acf;
}

// Pointwise-greatest convex sequence below the input: the convex envelope
// at m is the smallest chord value over all index pairs spanning m.
std::vector<double> gcm_brute_force(const std::vector<double>& v) {
  const std::size_t m = v.size();
  std::vector<double> out(v);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = i; k <= j; ++k) {
        const double w = static_cast<double>(k - i) / static_cast<double>(j - i);
        out[k] = std::min(out[k], (1.0 - w) * v[i] + w * v[j]);
      }
    }
  }
  return out;
}

} // namespace

TEST_CASE("gamma pairs from exact autocorrelations") {
  // White noise: gamma0 = 1, then zero pairs truncate immediately.
  auto pairs = gamma_pairs(acf_from({1, 0, 0, 0, 0, 0}));
  CHECK(pairs.gamma[0] == 1.0);
  CHECK(pairs.truncation_m == 0);
  CHECK(2.0 * pairs.gamma[0] - 1.0 == 1.0); // the tau this implies

  pairs = gamma_pairs(acf_from({1, 0.5, -0.3, -0.3}));
  CHECK(pairs.gamma[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(pairs.gamma[1] == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(pairs.truncation_m == 0);

  // Geometric AR(1) autocorrelations: gamma_m = phi^(2m) (1 + phi) > 0.
  const double phi = 0.98;
  std::vector<double> rho(41);
  for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = std::pow(phi, k);
  pairs = gamma_pairs(acf_from(rho));
  REQUIRE(pairs.gamma.size() == 20);
  CHECK(pairs.truncation_m == 19);
  for (std::size_t m = 0; m < pairs.gamma.size(); ++m)
    CHECK(pairs.gamma[m] ==
          doctest::Approx(std::pow(phi, 2.0 * m) * (1.0 + phi)).epsilon(1e-12));

  // Unpaired trailing autocorrelation (even max lag) is ignored.
  CHECK(gamma_pairs(acf_from({1, 0.5, 0.25})).gamma.size() == 1);
}

TEST_CASE("greatest convex minorant on small cases") {
  CHECK(greatest_convex_minorant({3, 1, 0.5, 0.4}) ==
        std::vector<double>{3, 1, 0.5, 0.4});
  const auto hull = greatest_convex_minorant({1.0, 0.9, 0.2});
  CHECK(hull[0] == 1.0);
  CHECK(hull[1] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(hull[2] == 0.2);
  CHECK(greatest_convex_minorant({5}) == std::vector<double>{5});
}

TEST_CASE("greatest convex minorant matches brute force") {
  Rng rng(99);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 50);
    std::vector<double> v(m);
    for (auto& x : v) x = rng.uniform(-1.0, 2.0);
    const auto fast = greatest_convex_minorant(v);
    const auto slow = gcm_brute_force(v);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-9));
      CHECK(fast[i] <= v[i] + 1e-12);
    }
    // Convexity of the output.
    for (std::size_t i = 2; i < m; ++i)
      CHECK(fast[i] - 2.0 * fast[i - 1] + fast[i - 2] >= -1e-10);
  }
}

TEST_CASE("running minimum smooths upward bumps") {
  CHECK(running_minimum({1.0, 0.8, 0.9}) == std::vector<double>{1.0, 0.8, 0.8});
}

TEST_CASE("iid series gives tau near one for all three estimators") {
  const auto series = iid_normal(10000, 5);
  for (const auto& est : {ips_tau(series), ims_tau(series), ics_tau(series)}) {
    CHECK(est.tau > 0.7);
    CHECK(est.tau < 1.4);
  }
}

TEST_CASE("antithetic chain gives tau below one") {
  const auto series = alternating(1000);
  const auto est = ips_tau(series);
  CHECK(est.tau > 0.0);
  CHECK(est.tau < 1.0);
}

TEST_CASE("AR(1) tau recovered at large n") {
  std::vector<double> ips, ics;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto series = gen_ar1(500000, 0.98, seed);
    ips.push_back(ips_tau(series).tau);
    ics.push_back(ics_tau(series).tau);
  }
  for (double med : {median(ips), median(ics)}) {
    CHECK(med > 70.0);
    CHECK(med < 130.0);
  }
}

TEST_CASE("the AR(2) series defeats the convex sequence estimator") {
  const auto est = ics_tau(gen_ar2(500000, 1.98, -0.99, 1));
  CHECK(est.tau > 10.0); // true tau is just under two
}

TEST_CASE("smoothing order: ics <= ims <= ips") {
  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 64 + static_cast<std::size_t>(rng.uniform() * 400);
    TimeSeries series = (rep % 3 == 0) ? iid_normal(n, 1000 + rep)
                        : (rep % 3 == 1)
                            ? gen_ar1(n, rng.uniform(-0.9, 0.95), 2000 + rep)
                            : alternating(n + (rep % 2));
    const double v_ips = ips_tau(series).tau;
    const double v_ims = ims_tau(series).tau;
    const double v_ics = ics_tau(series).tau;
    CHECK(v_ics <= v_ims + 1e-12);
    CHECK(v_ims <= v_ips + 1e-12);
  }
}

TEST_CASE("ics smoothed pair sums are positive, nonincreasing and convex") {
  const auto series = gen_ar1(20000, 0.95, 3);
  const auto pairs = gamma_pairs(sample_acf(series, series.size() - 2));
  const auto smoothed = smoothed_gamma(pairs, Method::Ics);
  REQUIRE(pairs.truncation_m >= 1);
  const auto last = static_cast<std::size_t>(pairs.truncation_m);
  for (std::size_t m = 0; m <= last; ++m) {
    CHECK(smoothed[m] > 0.0);
    if (m >= 1) CHECK(smoothed[m] <= smoothed[m - 1] + 1e-12);
    if (m >= 2) CHECK(smoothed[m] - 2.0 * smoothed[m - 1] + smoothed[m - 2] >= -1e-10);
  }
}

TEST_CASE("estimators are affine invariant") {
  const auto series = gen_ar1(8000, 0.9, 21);
  const auto mapped = affine(series, 3.0, -7.0);
  CHECK(ips_tau(series).tau == doctest::Approx(ips_tau(mapped).tau).epsilon(1e-10));
  CHECK(ims_tau(series).tau == doctest::Approx(ims_tau(mapped).tau).epsilon(1e-10));
  CHECK(ics_tau(series).tau == doctest::Approx(ics_tau(mapped).tau).epsilon(1e-10));
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(ics_tau(TimeSeries(std::vector<double>(50, 2.0))), DegenerateSeries);
  CHECK_THROWS_AS(ips_tau(iid_normal(3, 1)), TooShort);
}
