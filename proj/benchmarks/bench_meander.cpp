#include <benchmark/benchmark.h>

#include "sturmkit/path_pairs.hpp"
#include "sturmkit/zero_numbers.hpp"

using namespace sturmkit;

namespace {

Permutation octahedron_sigma() {
  return parse_permutation("n=27 (2 24)(3 19)(6 18)(7 17)(10 16)(11 25)(12 26)(13 15)(21 23)");
}

void BM_BuildMeander(benchmark::State& state) {
  const Permutation sigma = octahedron_sigma();
  for (auto _ : state) {
    Meander m = Meander::build(sigma);
    benchmark::DoNotOptimize(m.is_sturm());
  }
}
BENCHMARK(BM_BuildMeander);

void BM_ThreeMeanderTemplateReport(benchmark::State& state) {
  const Meander m = Meander::build(octahedron_sigma());
  for (auto _ : state) {
    Report r = m.three_meander_template_report();
    benchmark::DoNotOptimize(r.ok());
  }
}
BENCHMARK(BM_ThreeMeanderTemplateReport);

void BM_ZeroMatrix(benchmark::State& state) {
  const Meander m = Meander::build(octahedron_sigma());
  for (auto _ : state) {
    auto zm = SignedZeroMatrix::from_meander(m);
    benchmark::DoNotOptimize(zm.n());
  }
}
BENCHMARK(BM_ZeroMatrix);

void BM_ConnectionGraph(benchmark::State& state) {
  const auto zm = SignedZeroMatrix::from_sigma(octahedron_sigma());
  for (auto _ : state) {
    auto g = connection_graph(zm);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_ConnectionGraph);

void BM_SzsPairOctahedron(benchmark::State& state) {
  const DecoratedComplex t = octahedron({1, 2}, {8, 11}, {10, 14});
  for (auto _ : state) {
    PathPair p = szs_pair(t);
    benchmark::DoNotOptimize(p.h0.size());
  }
}
BENCHMARK(BM_SzsPairOctahedron);

void BM_ComplexReconstruction(benchmark::State& state) {
  const auto t = hemisphere_template(SignedZeroMatrix::from_sigma(octahedron_sigma()));
  for (auto _ : state) {
    DecoratedComplex c = complex_from_signed_template(t);
    benchmark::DoNotOptimize(c.complex.cell_count());
  }
}
BENCHMARK(BM_ComplexReconstruction);

}  // namespace
