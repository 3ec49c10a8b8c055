#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "kummer/pure_gaps.hpp"
#include "kummer/rr_oracle.hpp"
#include "kummer/semigroups.hpp"
#include "kummer/verify.hpp"

namespace {

void BM_RiemannRochDimension(benchmark::State& state) {
  const kummer::KummerCurve curve(state.range(0), 7);
  std::vector<std::int64_t> d(8, 3);
  d[0] = curve.genus();
  for (auto _ : state)
    benchmark::DoNotOptimize(kummer::riemann_roch_dimension(curve, d));
}
BENCHMARK(BM_RiemannRochDimension)->Arg(8)->Arg(22)->Arg(64);

void BM_BruteForceTwoPoint(benchmark::State& state) {
  const kummer::KummerCurve curve(state.range(0) * 4 + 1, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(kummer::brute_force_two_point_gap_count(
        curve, kummer::TwoPointFlavor::kFiniteFinite));
}
BENCHMARK(BM_BruteForceTwoPoint)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_HommaAssembly(benchmark::State& state) {
  const kummer::KummerCurve curve(state.range(0) * 4 + 1, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(kummer::count_gaps_two_points(
        curve, kummer::TwoPointFlavor::kFiniteFinite));
}
BENCHMARK(BM_HommaAssembly)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

// Enumeration at P_inf + 2 finite places: characterization vs oracle.
void BM_EnumeratePureGaps(benchmark::State& state) {
  const kummer::KummerCurve curve(7, 3);
  const kummer::PlaceSignature sig{true, 2};
  const auto mode = state.range(0) == 0
                        ? kummer::PureGapMode::kCharacterization
                        : kummer::PureGapMode::kOracle;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kummer::enumerate_pure_gaps(curve, sig, std::nullopt, mode));
}
BENCHMARK(BM_EnumeratePureGaps)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
