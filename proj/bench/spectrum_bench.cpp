#include <benchmark/benchmark.h>

#include "cubicycle/cycles.hpp"
#include "cubicycle/fixtures.hpp"
#include "cubicycle/line_graph.hpp"

using namespace cubicycle;

namespace {

const Graph& cuboctahedron() {
  static const Graph g = line_graph(fixtures::cube().graph).graph;
  return g;
}

const Graph& dodecahedron_line_graph() {
  static const Graph g = line_graph(fixtures::dodecahedron().graph).graph;
  return g;
}

template <bool Parallel>
void spectrum(benchmark::State& state, const Graph& g) {
  for (auto _ : state) {
    Budget budget;
    const Vertex forbid = static_cast<Vertex>(state.range(0));
    auto s = Parallel ? cycle_spectrum(g, forbid, budget) : cycle_spectrum_serial(g, forbid, budget);
    benchmark::DoNotOptimize(s.witnesses.size());
  }
}

void BM_SpectrumSerial_Cuboctahedron(benchmark::State& s) { spectrum<false>(s, cuboctahedron()); }
void BM_SpectrumParallel_Cuboctahedron(benchmark::State& s) { spectrum<true>(s, cuboctahedron()); }
void BM_SpectrumSerial_LDodecahedron(benchmark::State& s) { spectrum<false>(s, dodecahedron_line_graph()); }
void BM_SpectrumParallel_LDodecahedron(benchmark::State& s) { spectrum<true>(s, dodecahedron_line_graph()); }

}  // namespace

BENCHMARK(BM_SpectrumSerial_Cuboctahedron)->Arg(0);
BENCHMARK(BM_SpectrumParallel_Cuboctahedron)->Arg(0);
BENCHMARK(BM_SpectrumSerial_LDodecahedron)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumParallel_LDodecahedron)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
