#include <benchmark/benchmark.h>

#include "germcalc/cli.hpp"
#include "germcalc/fitting.hpp"

using namespace germcalc;

namespace {

MultiGerm stacked_germ() {
  return parse_germ(R"({"name": "stacked", "branches": [
    {"point": "a", "components": ["x", "y^3", "x*y + y^5"]},
    {"point": "b", "components": ["x", "y^2", "y^3 - x^3*y"]},
    {"point": "c", "components": ["x", "y^2", "x^2*y + y^5"]}]})");
}

void minors_kernel(benchmark::State& state, Execution exec) {
  const PolyMatrix m = assemble_presentation(stacked_germ(), 12);
  for (auto _ : state) {
    Ideal f = fitting_ideal(m, 2, exec);
    benchmark::DoNotOptimize(f);
  }
  state.counters["size"] = static_cast<double>(m.rows());
}

void corpus_run(benchmark::State& state, Execution exec) {
  CorpusConfig config;
  config.changes = 0;
  for (auto _ : state) {
    auto entries = run_corpus(config, exec);
    benchmark::DoNotOptimize(entries);
  }
}

}  // namespace

BENCHMARK_CAPTURE(minors_kernel, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(minors_kernel, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(corpus_run, serial, Execution::serial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(corpus_run, parallel, Execution::parallel)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
