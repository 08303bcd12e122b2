#include <benchmark/benchmark.h>

#include "sqcore/analyzer.hpp"
#include "sqcore/core_builder.hpp"
#include "sqcore/instances.hpp"
#include "sqcore/isomorphism.hpp"
#include "sqcore/pieces.hpp"

using namespace sqcore;

namespace {

// range(0) = genus, range(1) = Nielsen moves
void BM_BuildCore(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)), 7, static_cast<int>(state.range(1)));
  int squares = 0;
  for (auto _ : state) {
    const auto c = build_quotient_core(inst.t1, inst.t2);
    squares = c.square_count();
    benchmark::DoNotOptimize(squares);
  }
  state.counters["squares"] = squares;
}
BENCHMARK(BM_BuildCore)->Args({2, 3})->Args({2, 6})->Args({3, 4})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_BuildCoreThreads(benchmark::State& state) {
  const auto inst = random_instance(3, 7, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_quotient_core(inst.t1, inst.t2, BuildOptions{static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_BuildCoreThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CheckHypothesis(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)), 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_hypothesis(inst.t1, inst.t2));
}
BENCHMARK(BM_CheckHypothesis)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HalfSpaces(benchmark::State& state) {
  const auto inst = random_instance(3, 1, 6);
  const auto edges = ball_edges(inst.t2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    HalfSpaceCache cache(inst.t2);
    for (const auto& e : edges) benchmark::DoNotOptimize(cache.plus(e));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * edges.size()));
}
BENCHMARK(BM_HalfSpaces)->Arg(3)->Arg(5);

void BM_Validate(benchmark::State& state) {
  const auto inst = random_instance(3, 7, 6);
  const auto c = build_quotient_core(inst.t1, inst.t2);
  for (auto _ : state) benchmark::DoNotOptimize(validate_properties(c, 3));
}
BENCHMARK(BM_Validate)->Unit(benchmark::kMicrosecond);

void BM_RoundTrip(benchmark::State& state) {
  const auto inst = random_instance(static_cast<int>(state.range(0)), 7, 6);
  const auto c = build_quotient_core(inst.t1, inst.t2);
  for (auto _ : state) {
    const auto dual = dual_complex(build_decomposition(c));
    benchmark::DoNotOptimize(isomorphic_colored(dual, c).isomorphic);
  }
}
BENCHMARK(BM_RoundTrip)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
