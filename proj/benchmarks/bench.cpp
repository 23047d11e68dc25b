// Timings of the main pipelines: parsing and translation, witness search, and the suites
// behind the acceptance criteria at their default windows.

#include <benchmark/benchmark.h>

#include "godel/model.hpp"
#include "godel/suites.hpp"
#include "godel/syntax.hpp"

namespace {

using namespace godel;

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> c = read_corpus(std::string(GODEL_BENCH_DATA) + "/corpus.txt");
  return c;
}

void BM_ParseCorpus(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& s : corpus()) benchmark::DoNotOptimize(parse_formula(s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_ParseCorpus);

void BM_TranslateCorpus(benchmark::State& state) {
  std::vector<Formula> fs;
  for (const auto& s : corpus()) fs.push_back(parse_formula(s));
  for (auto _ : state)
    for (const auto& f : fs) benchmark::DoNotOptimize(dialectica_translate(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}
BENCHMARK(BM_TranslateCorpus);

void BM_CorpusSweep(benchmark::State& state) {
  const auto carriers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_corpus(corpus(), carriers, 27));
}
BENCHMARK(BM_CorpusSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state, const char* suite, const char* doctrine) {
  SuiteConfig c;
  c.doctrine = DoctrineSpec::builtin(doctrine);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, c));
}
BENCHMARK_CAPTURE(BM_Suite, hyperdoctrine_subsets, "hyperdoctrine", "subsets")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, iso_subsets, "iso", "subsets")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, godel_dial, "godel", "dial-of-subsets")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, principles_dial, "principles", "dial-of-subsets")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, extraction_dial, "extraction", "dial-of-subsets")
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
