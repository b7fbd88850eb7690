#include <benchmark/benchmark.h>

#include "tconn/connecting.hpp"
#include "tconn/dcs.hpp"
#include "tconn/generators.hpp"
#include "tconn/induced_paths.hpp"

using namespace tconn;

static void BM_Figure1Paths(benchmark::State& state) {
  const Figure1Instance f = gen_figure1({static_cast<int>(state.range(0)), 1, Figure1Variant::Exact3i});
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = enumerate_induced_paths(f.graph, f.source, f.targets, std::nullopt,
                                    [](const InducedPath&) { return Flow::Continue; })
                .count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["paths"] = static_cast<double>(count);
  state.counters["per_path"] = benchmark::Counter(static_cast<double>(count), benchmark::Counter::kIsIterationInvariantRate |
                                                                              benchmark::Counter::kInvert);
}
BENCHMARK(BM_Figure1Paths)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Figure1Connecting(benchmark::State& state) {
  const Figure1Instance f = gen_figure1({static_cast<int>(state.range(0)), 1, Figure1Variant::Exact3i});
  const ConnectingOptions opt{ConnectingStrategy::Branching, static_cast<PathMode>(state.range(1))};
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = enumerate_minimal_connecting(f.graph, f.terminals(), [](const VertexSet&) { return Flow::Continue; }, opt)
                .emitted;
    benchmark::DoNotOptimize(count);
  }
  state.counters["sets"] = static_cast<double>(count);
}
BENCHMARK(BM_Figure1Connecting)
    ->ArgsProduct({{4, 6, 8}, {static_cast<long>(PathMode::Rebuild), static_cast<long>(PathMode::Incremental)}})
    ->Unit(benchmark::kMillisecond);

static void BM_RandomConnecting(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = gen_random(n, 0.3, 17);
  VertexSet t(n, {0, n / 2, n - 1});
  for (auto _ : state) {
    auto r = enumerate_minimal_connecting(g, t, [](const VertexSet&) { return Flow::Continue; });
    benchmark::DoNotOptimize(r.emitted);
  }
}
BENCHMARK(BM_RandomConnecting)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

static void BM_TwoDcs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = gen_named(NamedGraph::Cycle, n);
  // Interleaved pairs on a cycle: a NO instance, so every candidate is examined.
  const DcsInstance inst{g, VertexSet(n, {0, n / 2}), VertexSet(n, {1, n / 2 + 1})};
  const DcsOptions opt{static_cast<DcsStrategy>(state.range(1)), false};
  for (auto _ : state) {
    auto r = solve_2dcs(inst, opt);
    benchmark::DoNotOptimize(r.candidates);
  }
}
BENCHMARK(BM_TwoDcs)
    ->ArgsProduct({{12, 16, 20}, {static_cast<long>(DcsStrategy::EnumerateMinimal), static_cast<long>(DcsStrategy::SubsetLoop)}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
