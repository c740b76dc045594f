#include <benchmark/benchmark.h>

#include "sturmkit/enumeration.hpp"

using namespace sturmkit;

namespace {

void BM_HamiltonianCountAdjacent(benchmark::State& state) {
  const BarycenterGraph g = barycenter_graph(octahedron_base());
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_hamiltonian_paths(g, 1, 2));
  }
}
BENCHMARK(BM_HamiltonianCountAdjacent)->Unit(benchmark::kMillisecond);

void BM_HamiltonianCountAntipodal(benchmark::State& state) {
  const BarycenterGraph g = barycenter_graph(octahedron_base());
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_hamiltonian_paths(g, 1, 6));
  }
}
BENCHMARK(BM_HamiltonianCountAntipodal)->Unit(benchmark::kMillisecond);

void BM_EnumerateTemplatesAdjacent(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_octahedron_templates(PoleChoice::adjacent).size());
  }
}
BENCHMARK(BM_EnumerateTemplatesAdjacent)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
