// Left-to-right vs balanced-tree matrix products, plus the O(N)-per-step
// closed form, for the odd-zeta and even-zeta specs.

#include <benchmark/benchmark.h>

#include "zoo/borwein_integral.hpp"
#include "zoo/gosper.hpp"
#include "zoo/lattice.hpp"

using namespace zoo;

namespace {

void BM_Direct(benchmark::State& state) {
  const auto spec = zeta_odd_spec(static_cast<int>(state.range(1)));
  const auto ctx = PrecisionContext::with_digits(100);
  for (auto _ : state) benchmark::DoNotOptimize(partial_product_direct(spec, state.range(0), ctx));
}

void BM_Pairwise(benchmark::State& state) {
  const auto spec = zeta_odd_spec(static_cast<int>(state.range(1)));
  const auto ctx = PrecisionContext::with_digits(100);
  for (auto _ : state) benchmark::DoNotOptimize(partial_product_pairwise(spec, state.range(0), ctx));
}

void BM_ClosedForm(benchmark::State& state) {
  const auto spec = zeta_odd_spec(static_cast<int>(state.range(1)));
  const auto ctx = PrecisionContext::with_digits(100);
  for (auto _ : state) benchmark::DoNotOptimize(v_partial_closed(spec, state.range(0), ctx));
}

void BM_PairwiseExact(benchmark::State& state) {
  const auto spec = zeta_even_spec(EvenVariant::Zeta6Corrected);
  for (auto _ : state) benchmark::DoNotOptimize(partial_product_pairwise_exact(spec, state.range(0)));
}

void BM_DirectExact(benchmark::State& state) {
  const auto spec = zeta_even_spec(EvenVariant::Zeta6Corrected);
  for (auto _ : state) benchmark::DoNotOptimize(partial_product_exact(spec, state.range(0)));
}

void BM_DualCorrectionFullScale(benchmark::State& state) {
  const auto ctx = PrecisionContext::with_digits(state.range(0));
  const BigReal a(100000L, ctx.precision()), l(5L, ctx.precision());
  for (auto _ : state) benchmark::DoNotOptimize(dual_correction(a, l, ctx));
}

void BM_MonteCarlo(benchmark::State& state) {
  const auto spec = ladder_spec(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(convolution_tail_oracle(spec, static_cast<std::uint64_t>(state.range(0)), 1));
}

}  // namespace

BENCHMARK(BM_Direct)->ArgsProduct({{100, 200, 400}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pairwise)->ArgsProduct({{100, 200, 400}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedForm)->ArgsProduct({{100, 200, 400}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectExact)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairwiseExact)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualCorrectionFullScale)->Arg(30)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MonteCarlo)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
