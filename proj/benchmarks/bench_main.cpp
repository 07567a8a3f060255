#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "mfa/blocks.hpp"
#include "mfa/geometry1d.hpp"
#include "mfa/moran.hpp"
#include "mfa/spectrum.hpp"
#include "mfa/symbolic.hpp"

namespace {

using namespace mfa;

const WeightedSystem& s1() {
  static const WeightedSystem sys =
      validate_system({{1.0 / 3.0, 2.0 / 3.0}, {0.5, 0.5}, std::vector<double>{0.0, 0.5}});
  return sys;
}

const WeightedSystem& three_map() {
  static const WeightedSystem sys = validate_system(
      {{0.2, 0.5, 0.3}, {0.3, 0.2, 0.4}, std::vector<double>{0.0, 0.35, 0.6}});
  return sys;
}

void BM_SolveTau(benchmark::State& state) {
  double q = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_tau(three_map(), q));
    q = q > 5.0 ? -5.0 : q + 0.37;
  }
}
BENCHMARK(BM_SolveTau);

void BM_FOfAlpha(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_of_alpha(three_map(), 0.9));
}
BENCHMARK(BM_FOfAlpha);

void BM_SpectrumTable(benchmark::State& state) {
  const QGrid grid{-20.0, 20.0, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_table(three_map(), grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SpectrumTable)->Arg(256)->Arg(4096)->UseRealTime();

void BM_AssouadEstimate(benchmark::State& state) {
  const Word w = sample_word(s1().probs(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(assouad_estimate(s1(), w, 100, 1000, 10));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 91);
}
BENCHMARK(BM_AssouadEstimate)->Arg(10000)->Arg(100000)->UseRealTime();

void BM_GreedyWord(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(greedy_word(s1(), 1.0, 100000));
}
BENCHMARK(BM_GreedyWord);

void BM_GammaTypeLevel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subshift_dimension(gamma_n_alpha(three_map(), n, 0.9)));
}
BENCHMARK(BM_GammaTypeLevel)->Arg(20)->Arg(200);

void BM_MoranConstruct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(moran_construct(s1(), 1.2, 0.05, 16, 20));
}
BENCHMARK(BM_MoranConstruct);

void BM_BallMeasure(benchmark::State& state) {
  const double r = std::ldexp(1.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ball_measure(three_map(), 0.4217, r));
}
BENCHMARK(BM_BallMeasure)->Arg(5)->Arg(20)->Arg(35);

void BM_AssouadScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(assouad_scan(s1(), 0.3141, ScaleGrid{2.0, 1, 30}, 20));
  }
}
BENCHMARK(BM_AssouadScan)->UseRealTime();

void BM_Witness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(non_doubling_witness(s1(), 1024.0, 12));
}
BENCHMARK(BM_Witness);

}  // namespace

BENCHMARK_MAIN();
