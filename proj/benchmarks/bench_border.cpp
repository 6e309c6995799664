#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <isoword/isoword.hpp>

namespace {

isoword::Word random_word(std::size_t n, unsigned d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick(0, d - 1);
  std::vector<isoword::Code> codes(n);
  for (auto& c : codes) c = static_cast<isoword::Code>(pick(rng));
  return isoword::Word(std::move(codes), d);
}

void BM_BuildIndex(benchmark::State& state) {
  const auto w = random_word(static_cast<std::size_t>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(isoword::build_index(w));
  state.SetComplexityN(state.range(0));
}

void BM_KangarooScan(benchmark::State& state) {
  const auto w = random_word(static_cast<std::size_t>(state.range(0)), 2, 2);
  const auto index = isoword::build_index(w);
  for (auto _ : state) benchmark::DoNotOptimize(isoword::find_k_error_borders(w, 2, index));
  state.SetComplexityN(state.range(0));
}

void BM_LeeScan(benchmark::State& state) {
  const auto w = random_word(static_cast<std::size_t>(state.range(0)), 4, 3);
  const auto index = isoword::build_index(w);
  for (auto _ : state)
    benchmark::DoNotOptimize(isoword::find_k_lee_error_borders(w, 2, 4, index));
  state.SetComplexityN(state.range(0));
}

void BM_NaiveScan(benchmark::State& state) {
  const auto w = random_word(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(isoword::naive_border_scan(w, 2));
  state.SetComplexityN(state.range(0));
}

void BM_CubeCheck(benchmark::State& state) {
  const auto f = random_word(4, 2, 5);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        isoword::check_isometric_embedding(f, n, 2, isoword::Metric::hamming));
}

}  // namespace

BENCHMARK(BM_BuildIndex)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();
BENCHMARK(BM_KangarooScan)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_LeeScan)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_NaiveScan)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_CubeCheck)->DenseRange(8, 14, 2);

BENCHMARK_MAIN();
