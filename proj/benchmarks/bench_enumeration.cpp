#include <benchmark/benchmark.h>

#include "fgdef/genericity.hpp"

namespace {

void BM_EnumerateSphere(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    fgdef::for_each_in_sphere({2, n}, [&](std::span<const fgdef::Letter>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fgdef::sphere_count({2, n})));
}
BENCHMARK(BM_EnumerateSphere)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_CountPieceRich(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  fgdef::EnumerationOptions options;
  options.parallelism = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgdef::count_piece_rich({2, n}, fgdef::Rational(1, 2), options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fgdef::sphere_count({2, n})));
}
BENCHMARK(BM_CountPieceRich)->ArgsProduct({{8, 10, 12}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
