// Serial reference vs OpenMP kernel for mixed volume and the direction scan.

#include <benchmark/benchmark.h>

#include <random>

#include "mvlift/analysis.hpp"
#include "mvlift/polytope.hpp"
#include "mvlift/sysio.hpp"

using namespace mvlift;

namespace {

std::vector<LatticePolytope> random_tuple(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> d(0, 3);
  std::vector<LatticePolytope> tuple;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> pts(n + 3, Point(n));
    for (auto& p : pts)
      for (auto& x : p) x = d(rng);
    tuple.push_back(convex_hull(n, pts));
  }
  return tuple;
}

void BM_MixedVolume(benchmark::State& state, Execution exec) {
  auto tuple = random_tuple(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(tuple, exec));
}

void BM_MixedVolumeSerial(benchmark::State& state) { BM_MixedVolume(state, Execution::serial); }
void BM_MixedVolumeParallel(benchmark::State& state) { BM_MixedVolume(state, Execution::parallel); }

const char* kThreeVar =
    "vars: x1 x2 x3\n"
    "1 + x1^2*x2^2 + x1^2*x2^4 + x3^2 + x1*x3 + x2*x3\n"
    "1 + x1^2*x2^2 + x1^2*x2^4 + 2*x3^2 + x1*x3 + x2*x3\n"
    "2 + x1*x2 + x1^2*x2^2 + x1^2*x2^4 + x3^2 + x1*x3 + x2*x3\n";

void BM_DirectionScan(benchmark::State& state, Execution exec) {
  PolySystem sys = parse_system(kThreeVar);
  for (auto _ : state) benchmark::DoNotOptimize(find_degenerate_directions(sys, exec));
}

void BM_DirectionScanSerial(benchmark::State& state) { BM_DirectionScan(state, Execution::serial); }
void BM_DirectionScanParallel(benchmark::State& state) { BM_DirectionScan(state, Execution::parallel); }

void BM_StrictDecrease(benchmark::State& state, Execution exec) {
  auto tuple = random_tuple(3, 7);
  auto smaller = tuple;
  smaller[0] = convex_hull(3, {tuple[0].vertices().front()});
  for (auto _ : state) benchmark::DoNotOptimize(strict_decrease(tuple, smaller, exec));
}

void BM_StrictDecreaseSerial(benchmark::State& state) { BM_StrictDecrease(state, Execution::serial); }
void BM_StrictDecreaseParallel(benchmark::State& state) { BM_StrictDecrease(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_MixedVolumeSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixedVolumeParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectionScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectionScanParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrictDecreaseSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrictDecreaseParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
