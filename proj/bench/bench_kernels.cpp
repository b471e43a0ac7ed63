// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "triplehom/gauss.hpp"
#include "triplehom/invariants.hpp"
#include "triplehom/search.hpp"

using namespace triplehom;

namespace {

const std::vector<GaussDiagram>& diagrams() {
  static const std::vector<GaussDiagram> all = [] {
    std::vector<GaussDiagram> out;
    for (const char* code : {"", "O1+ U2+ O3+ U1+ O2+ U3+", "O1+ U2- O3- U1+ O4+ U3- O2- U4+"}) {
      SearchBounds b;
      b.max_crossings = 10;
      b.max_depth = 5;
      b.node_budget = 2000;
      auto r = enumerate_reachable(parse_gauss_code(code), b);
      out.insert(out.end(), r.diagrams.begin(), r.diagrams.end());
    }
    return out;
  }();
  return all;
}

void v2_serial(benchmark::State& state) {
  const auto& ds = diagrams();
  for (auto _ : state) benchmark::DoNotOptimize(v2_batch_serial(ds));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ds.size()));
}

void v2_openmp(benchmark::State& state) {
  const auto& ds = diagrams();
  for (auto _ : state) benchmark::DoNotOptimize(v2_batch(ds));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ds.size()));
}

void search(benchmark::State& state, bool parallel) {
  const GaussDiagram t = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
  SearchBounds b;
  b.max_crossings = 6;
  b.max_depth = 4;
  b.node_budget = 20000;
  b.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reachable(t, b).diagrams.size());
}

void search_serial(benchmark::State& state) { search(state, false); }
void search_parallel(benchmark::State& state) { search(state, true); }

}  // namespace

BENCHMARK(v2_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(v2_openmp)->Unit(benchmark::kMillisecond);
BENCHMARK(search_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(search_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
