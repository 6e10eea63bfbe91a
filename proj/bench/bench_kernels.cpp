#include <benchmark/benchmark.h>

#include <omp.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "shallow/baker.hpp"
#include "shallow/generators.hpp"
#include "shallow/graph.hpp"
#include "shallow/planar_td.hpp"

namespace {

// Argument 0 selects the serial reference, anything else an OpenMP team of at
// least two threads so the parallel path runs even on a single core.
shallow::Execution execution_for(const benchmark::State& state) {
  return state.range(1) == 0 ? shallow::Execution::serial() : shallow::Execution{std::max(2, omp_get_max_threads())};
}

void BM_Eccentricities(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const shallow::EmbeddedGraph e = shallow::grid(side, side);
  const shallow::Execution exec = execution_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(shallow::eccentricities(e.graph(), exec));
  state.SetLabel(exec.jobs == 1 ? "serial" : "omp x" + std::to_string(exec.jobs));
}
BENCHMARK(BM_Eccentricities)->ArgsProduct({{20, 40}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PtasOffsets(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const shallow::EmbeddedGraph e = shallow::grid(side, side);
  const shallow::Execution exec = execution_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(shallow::ptas_mis(e, 4, exec));
  state.SetLabel(exec.jobs == 1 ? "serial" : "omp x" + std::to_string(exec.jobs));
}
BENCHMARK(BM_PtasOffsets)->ArgsProduct({{12, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SubisoOffsets(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const shallow::EmbeddedGraph e = shallow::grid(side, side);
  // K4 never occurs in a grid, so every offset and window is searched
  const std::vector<std::pair<shallow::Vertex, shallow::Vertex>> k4_edges{{0, 1}, {0, 2}, {0, 3},
                                                                          {1, 2}, {1, 3}, {2, 3}};
  const shallow::Graph k4 = shallow::build_graph(4, k4_edges);
  const shallow::Execution exec = execution_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(shallow::subiso_driver(e, k4, false, exec));
  state.SetLabel(exec.jobs == 1 ? "serial" : "omp x" + std::to_string(exec.jobs));
}
BENCHMARK(BM_SubisoOffsets)->ArgsProduct({{10, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_PlanarBfsTd(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const shallow::EmbeddedGraph e = shallow::grid(side, side);
  const shallow::Vertex root = shallow::choose_root(e.graph());
  for (auto _ : state) benchmark::DoNotOptimize(shallow::planar_bfs_td(e, root));
  state.counters["edges"] = static_cast<double>(e.graph().num_edges());
  state.SetComplexityN(e.graph().num_edges());
}
BENCHMARK(BM_PlanarBfsTd)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace

BENCHMARK_MAIN();
