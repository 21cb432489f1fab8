#include <benchmark/benchmark.h>

#include "k3bm/badred.hpp"
#include "k3bm/fixtures.hpp"
#include "k3bm/picard.hpp"
#include "k3bm/surface.hpp"

using namespace k3bm;

namespace {

const K3Surface& example() {
  static const K3Surface X =
      build_k3(load_example_fixture(example_fixture_path(K3BM_BENCH_DATA_DIR)).sextet);
  return X;
}

void BM_DegreeSums(benchmark::State& state) {
  const auto& f = example().branch;
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(degree_sums(f, 3, d));
}
BENCHMARK(BM_DegreeSums)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_CountNaive(benchmark::State& state) {
  const auto& f = example().branch;
  for (auto _ : state) benchmark::DoNotOptimize(count_points(f, 3, 5, CountStrategy::naive));
}
BENCHMARK(BM_CountNaive)->Unit(benchmark::kMillisecond);

void BM_IsBadPrime(benchmark::State& state) {
  const auto& f = example().branch;
  const BigInt p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(is_bad_prime(f, p));
}
BENCHMARK(BM_IsBadPrime)->Arg(13)->Arg(650779)->Unit(benchmark::kMillisecond);

void BM_ResultantLargePrime(benchmark::State& state) {
  const auto fx = load_example_fixture(example_fixture_path(K3BM_BENCH_DATA_DIR));
  const auto& f = example().branch;
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(f, fx.gcd));
}
BENCHMARK(BM_ResultantLargePrime)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_TritangentScan(benchmark::State& state) {
  const auto& f = example().branch;
  const BigInt p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(find_tritangent(f, p));
}
BENCHMARK(BM_TritangentScan)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
