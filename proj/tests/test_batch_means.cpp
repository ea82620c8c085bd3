#include <doctest.h>

#include <algorithm>
#include <vector>

#include "actime/batch_means.hpp"
#include "actime/generators.hpp"
#include "helpers.hpp"

using namespace actime;
using namespace actime::testing;

TEST_CASE("default plan uses floor(n^(2/3)) batch size") {
  auto plan = BatchPlan::for_length(1000);
  CHECK(plan.batch_size == 100);
  CHECK(plan.num_batches == 10);

  plan = BatchPlan::for_length(8);
  CHECK(plan.batch_size == 4);
  CHECK(plan.num_batches == 2);

  plan = BatchPlan::for_length(500000);
  CHECK(plan.batch_size == 6299);
  CHECK(plan.num_batches == 79);

  CHECK_THROWS_AS(BatchPlan::for_length(7), TooShort);
  CHECK_THROWS_AS(BatchPlan::with_batch_size(10, 6), TooShort);
}

TEST_CASE("batch size one gives tau of exactly one") {
  const auto series = iid_normal(1000, 3);
  const auto est = batch_means_tau(series, BatchPlan::with_batch_size(1000, 1));
  CHECK(est.tau == 1.0);
}

TEST_CASE("iid series has tau near one") {
  const auto est = batch_means_tau(iid_normal(100000, 5));
  CHECK(est.tau > 0.5);
  CHECK(est.tau < 2.0);
  CHECK(est.detail.at("batch_size") == 2154);
  CHECK(est.detail.at("num_batches") == 46);
}

TEST_CASE("AR(1) tau is recovered at large n") {
  std::vector<double> taus;
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    taus.push_back(batch_means_tau(gen_ar1(500000, 0.98, seed)).tau);
  const double med = median(taus);
  CHECK(med > 60.0);
  CHECK(med < 140.0);
}

TEST_CASE("batch means is invariant under affine maps") {
  const auto series = gen_ar1(5000, 0.9, 11);
  const double a = batch_means_tau(series).tau;
  const double b = batch_means_tau(affine(series, 3.0, -7.0)).tau;
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
}

TEST_CASE("permuting whole batches leaves tau unchanged") {
  const auto series = gen_ar1(9000, 0.9, 13);
  const auto plan = BatchPlan::for_length(series.size());
  const double before = batch_means_tau(series, plan).tau;

  // Swap batch blocks pairwise.
  std::vector<double> shuffled(series.values());
  const std::size_t m = plan.batch_size;
  for (std::size_t j = 0; j + 1 < plan.num_batches; j += 2)
    std::swap_ranges(shuffled.begin() + j * m, shuffled.begin() + (j + 1) * m,
                     shuffled.begin() + (j + 1) * m);
  const double after = batch_means_tau(TimeSeries(std::move(shuffled)), plan).tau;
  CHECK(before == doctest::Approx(after).epsilon(1e-12));
}

TEST_CASE("tau is always positive") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    CHECK(batch_means_tau(iid_normal(256, seed)).tau > 0.0);
  CHECK(batch_means_tau(alternating(1000)).tau > 0.0);
}

TEST_CASE("degenerate and undersized inputs are rejected") {
  CHECK_THROWS_AS(batch_means_tau(TimeSeries(std::vector<double>(100, 3.0))),
                  DegenerateSeries);
  CHECK_THROWS_AS(batch_means_tau(TimeSeries(std::vector<double>(100, 4.2))),
                  DegenerateSeries);
  CHECK_THROWS_AS(batch_means_tau(iid_normal(6, 1)), TooShort);
  BatchPlan plan;
  plan.batch_size = 200;
  plan.num_batches = 3; // 600 > 500
  CHECK_THROWS_AS(batch_means_tau(iid_normal(500, 1), plan), TooShort);
}
