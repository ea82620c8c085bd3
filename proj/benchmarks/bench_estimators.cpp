// Microbenchmarks for the estimators and generators. The headline
// comparison is estimator cost at realistic chain lengths: batch means is
// the cheap one, the AR fit and the initial-sequence estimators pay for
// autocorrelation computation, the spectrum fit for a full-length FFT.

#include <benchmark/benchmark.h>

#include "actime/ar_process.hpp"
#include "actime/batch_means.hpp"
#include "actime/generators.hpp"
#include "actime/initial_seq.hpp"
#include "actime/spectrum.hpp"
#include "actime/stats.hpp"

using namespace actime;

namespace {

const TimeSeries& chain(std::size_t n) {
  static std::map<std::size_t, TimeSeries> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_ar1(n, 0.98, 42)).first;
  return it->second;
}

void BM_BatchMeans(benchmark::State& state) {
  const auto& series = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(batch_means_tau(series).tau);
}
BENCHMARK(BM_BatchMeans)->Arg(10000)->Arg(100000)->Arg(500000);

void BM_SpectrumFit(benchmark::State& state) {
  const auto& series = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_fit_tau(series).tau);
}
BENCHMARK(BM_SpectrumFit)->Arg(10000)->Arg(100000)->Arg(500000);

void BM_Ics(benchmark::State& state) {
  const auto& series = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ics_tau(series).tau);
}
BENCHMARK(BM_Ics)->Arg(10000)->Arg(100000)->Arg(500000);

void BM_ArTau(benchmark::State& state) {
  const auto& series = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ar_tau(series).tau);
}
BENCHMARK(BM_ArTau)->Arg(10000)->Arg(100000)->Arg(500000);

void BM_ArTauCi(benchmark::State& state) {
  const auto& series = chain(10000);
  for (auto _ : state)
    benchmark::DoNotOptimize(ar_tau_ci(series, 0.95, 1000, 7).upper);
}
BENCHMARK(BM_ArTauCi);

void BM_SampleAcfDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(chain(n).values());
  for (auto _ : state)
    benchmark::DoNotOptimize(detail::autocovariance_direct(x, n - 2));
}
BENCHMARK(BM_SampleAcfDirect)->Arg(1024)->Arg(4096);

void BM_SampleAcfFft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(chain(n).values());
  for (auto _ : state)
    benchmark::DoNotOptimize(detail::autocovariance_fft(x, n - 2));
}
BENCHMARK(BM_SampleAcfFft)->Arg(1024)->Arg(4096)->Arg(100000);

void BM_Generate(benchmark::State& state) {
  SeriesSpec spec;
  spec.kind = static_cast<SeriesKind>(state.range(0));
  spec.n = 100000;
  spec.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(generate(spec).size());
}
BENCHMARK(BM_Generate)
    ->Arg(static_cast<int>(SeriesKind::Ar1))
    ->Arg(static_cast<int>(SeriesKind::Ar1Arch1))
    ->Arg(static_cast<int>(SeriesKind::MetGauss))
    ->Arg(static_cast<int>(SeriesKind::BimodalMet))
    ->Arg(static_cast<int>(SeriesKind::StepoutLogVar));

} // namespace

BENCHMARK_MAIN();
