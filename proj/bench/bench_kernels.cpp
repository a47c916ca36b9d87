#include <benchmark/benchmark.h>
#include <omp.h>

#include <sstream>

#include "sq7/catalog.hpp"
#include "sq7/choosability.hpp"
#include "sq7/corpus.hpp"
#include "sq7/formats.hpp"
#include "sq7/nullstellensatz.hpp"
#include "sq7/scan.hpp"

using namespace sq7;

namespace {

const Configuration& h3() {
  static const Configuration cfg = build_config("H3");
  return cfg;
}

void BM_CoefficientDense(benchmark::State& state) {
  const GraphPolynomial p = graph_polynomial(h3().coloring_graph());
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_dense(p, h3().certificate->exponents));
}
BENCHMARK(BM_CoefficientDense)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CoefficientSparse(benchmark::State& state) {
  const GraphPolynomial p = graph_polynomial(h3().coloring_graph());
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_sparse(p, h3().certificate->exponents));
}
BENCHMARK(BM_CoefficientSparse)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveSerial(benchmark::State& state) {
  const Configuration cfg = build_config("J2");
  const Graph g = cfg.coloring_graph();
  for (auto _ : state) benchmark::DoNotOptimize(check_choosability_serial(g, cfg.list_sizes, cfg.constraints));
}
BENCHMARK(BM_ExhaustiveSerial)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveParallel(benchmark::State& state) {
  const Configuration cfg = build_config("J2");
  const Graph g = cfg.coloring_graph();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  ChoosabilityOptions opts;
  opts.mode = CheckMode::Exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(check_choosability(g, cfg.list_sizes, cfg.constraints, opts));
}
BENCHMARK(BM_ExhaustiveParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Scan(benchmark::State& state) {
  std::ostringstream corpus;
  for (std::uint64_t seed = 1; seed <= 64; ++seed)
    corpus << to_graph6(random_cubic_plane_graph(8 + static_cast<int>(seed % 8), seed).graph()) << '\n';
  ScanOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::istringstream in(corpus.str());
    benchmark::DoNotOptimize(scan_corpus(in, opts));
  }
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
