#include <benchmark/benchmark.h>

#include <sstream>

#include "c3/corpus.hpp"
#include "c3/graph.hpp"
#include "c3/metrics.hpp"
#include "c3/solver.hpp"
#include "c3/synth.hpp"

namespace {

c3::Corpus corpus_for(std::int64_t papers) {
  c3::SynthParams p;
  p.n_papers = static_cast<std::size_t>(papers);
  p.n_authors = static_cast<std::size_t>(papers * 2 / 5);
  p.seed = 1;
  return c3::generate(p);
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corpus_for(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_ParseJsonl(benchmark::State& state) {
  const auto text = c3::to_jsonl(corpus_for(state.range(0)));
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(c3::parse_jsonl(in));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseJsonl)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  const auto corpus = corpus_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c3::build_graph(corpus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_Baselines(benchmark::State& state) {
  const auto graph = c3::build_graph(corpus_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c3::compute_baselines(graph));
}
BENCHMARK(BM_Baselines)->Arg(100'000)->Unit(benchmark::kMillisecond);

// range(0) papers, range(1) threads.
void BM_Solve(benchmark::State& state) {
  const auto graph = c3::build_graph(corpus_for(state.range(0)));
  c3::SolverConfig cfg;
  cfg.threads = static_cast<std::size_t>(state.range(1));
  std::size_t iterations = 0;
  for (auto _ : state) {
    auto r = c3::solve(graph, cfg);
    iterations = r.report.iterations_run;
    benchmark::DoNotOptimize(r);
  }
  state.counters["solver_iterations"] = static_cast<double>(iterations);
}
BENCHMARK(BM_Solve)
    ->Args({10'000, 1})
    ->Args({100'000, 1})
    ->Args({100'000, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
