#include <benchmark/benchmark.h>

#include "nsg/census.hpp"
#include "nsg/cyclo.hpp"
#include "nsg/identities.hpp"
#include "nsg/semigroup.hpp"

namespace {

void BM_Cyclotomic(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(nsg::cyclotomic(n));
}
BENCHMARK(BM_Cyclotomic)->Arg(105)->Arg(2401)->Arg(15015)->Unit(benchmark::kMicrosecond);

void BM_InclusionExclusion(benchmark::State& state) {
  const nsg::RhoSet rho({state.range(0), state.range(0) + 1});
  for (auto _ : state) benchmark::DoNotOptimize(nsg::inclusion_exclusion(rho));
}
BENCHMARK(BM_InclusionExclusion)->Arg(10)->Arg(49)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Apery(benchmark::State& state) {
  const auto m = state.range(0);
  const std::vector<std::int64_t> gens{m, m + 1, 2 * m + 3, 3 * m - 1};
  for (auto _ : state) benchmark::DoNotOptimize(nsg::NumericalSemigroup(gens));
}
BENCHMARK(BM_Apery)->Arg(100)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);

void BM_Folklore(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(nsg::folklore_check(p, p + 1));
}
BENCHMARK(BM_Folklore)->Arg(10)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  const nsg::Gamma gamma{1, 20};
  for (auto _ : state) benchmark::DoNotOptimize(nsg::theta_census(state.range(0), gamma, 1));
}
BENCHMARK(BM_Census)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
