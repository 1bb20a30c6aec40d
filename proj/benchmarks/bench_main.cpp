#include <benchmark/benchmark.h>

#include "mtc/channel.hpp"
#include "mtc/detector.hpp"
#include "mtc/simkit.hpp"
#include "mtc/specfun.hpp"
#include "mtc/stabledist.hpp"

namespace {

using mtc::channel::ChannelSpec;
using mtc::stabledist::StableParams;

void BM_FaddeevaSmall(benchmark::State& state) {
  std::complex<double> z(0.7, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(mtc::specfun::faddeeva_w(z));
}
BENCHMARK(BM_FaddeevaSmall);

void BM_FaddeevaLarge(benchmark::State& state) {
  std::complex<double> z(40.0, 25.0);
  for (auto _ : state) benchmark::DoNotOptimize(mtc::specfun::faddeeva_w(z));
}
BENCHMARK(BM_FaddeevaLarge);

void BM_PdfHalfSkew(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtc::stabledist::pdf_half_skew(x, 1.0, 0.7));
    x = x < 100.0 ? x * 1.01 : 0.1;
  }
}
BENCHMARK(BM_PdfHalfSkew);

void BM_CdfNumeric(benchmark::State& state) {
  const StableParams p = StableParams::half(1.0, 0.5);
  double x = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mtc::stabledist::cdf_numeric(x, p));
    x = x < 5.0 ? x + 0.37 : -5.0;
  }
}
BENCHMARK(BM_CdfNumeric);

void BM_Threshold(benchmark::State& state) {
  const ChannelSpec spec = ChannelSpec::make_c(20.0, 930.0, 150.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(mtc::detector::compute_threshold(spec, 25.0));
}
BENCHMARK(BM_Threshold);

void BM_McBer(benchmark::State& state) {
  const ChannelSpec spec = ChannelSpec::make_a(20.0, 150.0);
  const auto rule = mtc::detector::compute_threshold(spec, 25.0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mtc::simkit::mc_ber(spec, 25.0, rule, n, {1, 0}));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(BM_McBer)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
