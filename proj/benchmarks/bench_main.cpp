#include <benchmark/benchmark.h>

#include <abchrom/acyclic_degree.hpp>
#include <abchrom/corpus.hpp>
#include <abchrom/exact.hpp>
#include <abchrom/families.hpp>
#include <abchrom/fixtures.hpp>
#include <abchrom/recolor.hpp>
#include <abchrom/witness.hpp>

namespace {

using namespace abchrom;

Graph family(const std::string& spec) { return generate(parse_family(spec)).graph; }

void BM_ExactInvariantsPath(benchmark::State& state) {
  auto g = family("path:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_invariants(g, {.with_m_a = false}).ab);
}
BENCHMARK(BM_ExactInvariantsPath)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ExactInvariantsJoin(benchmark::State& state) {
  auto g = family("join(cycle:5,cycle:5)");
  for (auto _ : state) benchmark::DoNotOptimize(exact_invariants(g, {.with_m_a = false}).ab);
}
BENCHMARK(BM_ExactInvariantsJoin)->Unit(benchmark::kMillisecond);

void BM_AcyclicColoringEnumeration(benchmark::State& state) {
  auto g = family("cycle:" + std::to_string(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_colorings(g, {ColoringFilter::acyclic}, [&](const Coloring&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AcyclicColoringEnumeration)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_MaDegreeRoof(benchmark::State& state) {
  auto g = family("roof:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m_a_degree(g));
}
BENCHMARK(BM_MaDegreeRoof)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_MaDegreeQuad2(benchmark::State& state) {
  auto g = family("quad:2");
  for (auto _ : state) benchmark::DoNotOptimize(m_a_degree(g));
}
BENCHMARK(BM_MaDegreeQuad2)->Unit(benchmark::kMillisecond);

void BM_CriticalCyclesFigure2(benchmark::State& state) {
  auto f = fixtures::figure2();
  for (auto _ : state) benchmark::DoNotOptimize(find_critical_cycles(f.graph.graph, f.coloring("c")).size());
}
BENCHMARK(BM_CriticalCyclesFigure2);

void BM_WitnessCertificationQuad2(benchmark::State& state) {
  auto spec = parse_family("quad:2");
  auto g = generate(spec).graph;
  auto c = reference_coloring(spec);
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_by_witnesses(g, c));
}
BENCHMARK(BM_WitnessCertificationQuad2)->Unit(benchmark::kMillisecond);

void BM_RecoloringAlgorithm(benchmark::State& state) {
  auto g = family("roof:" + std::to_string(state.range(0)));
  AlgorithmOptions opts;
  opts.strategy = Strategy::random;
  opts.choice = ColorChoice::random;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    opts.seed = seed++;
    benchmark::DoNotOptimize(run_recoloring_algorithm(g, opts).result.num_colors());
  }
}
BENCHMARK(BM_RecoloringAlgorithm)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_ConnectedGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus::connected_graphs_up_to(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_ConnectedGraphs)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
