#include <benchmark/benchmark.h>

#include <random>

#include "fmzv/crt_pipeline.hpp"
#include "fmzv/dynamic_mitm.hpp"
#include "fmzv/harmonic.hpp"
#include "fmzv/mitm.hpp"

using namespace fmzv;

namespace {

// Args: weight, prime.
void BM_TreeDpSerial(benchmark::State& state) {
  const IndexTree tree = bounded_weight_tree(static_cast<std::uint32_t>(state.range(0)));
  const Prime p(static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_dp_serial(p, tree));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tree.size()) * state.range(1));
}

// Args: weight, prime, workers.
void BM_TreeDpParallel(benchmark::State& state) {
  const IndexTree tree = bounded_weight_tree(static_cast<std::uint32_t>(state.range(0)));
  const Prime p(static_cast<std::uint64_t>(state.range(1)));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(tree_dp_parallel(p, tree, workers));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tree.size()) * state.range(1));
}

// One index at a time vs the shared tree. Args: weight, engine.
void BM_ModHarmonicSums(benchmark::State& state) {
  const std::vector<Prime> primes{Prime(10007), Prime(10009), Prime(10037), Prime(10039)};
  HarmonicOptions options;
  options.engine = static_cast<Engine>(state.range(1));
  options.workers = static_cast<int>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mod_harmonic_sums(primes, static_cast<std::uint32_t>(state.range(0)), options));
  }
  state.SetLabel(std::string(engine_name(options.engine)));
}

// A relation-free instance forces a full scan. Args: workers.
void BM_MitmScan(benchmark::State& state) {
  const ModularGroup g{Modulus(1000000007)};
  std::mt19937_64 rng(7);
  std::vector<std::uint64_t> x(8);
  for (auto& v : x) v = rng() % 1000000007;
  const std::uint32_t bound = 4;
  const CoefficientArray c(bound);
  SolveOptions options;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_bounded_relation(
        g, std::span<const std::uint64_t>(x), bound,
        [&c](std::span<const std::uint32_t> t) { return not_all_zero(c, t); }, options));
  }
}

void BM_Pipeline(benchmark::State& state) {
  PipelineConfig config;
  config.weight = static_cast<std::uint32_t>(state.range(0));
  config.primes = {Prime(1009), Prime(1013), Prime(1019), Prime(1021)};
  config.bound = static_cast<std::uint32_t>(state.range(1));
  config.workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(config));
}

}  // namespace

BENCHMARK(BM_TreeDpSerial)->Args({10, 10007})->Args({10, 20011})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeDpParallel)
    ->Args({10, 10007, 1})
    ->Args({10, 10007, 2})
    ->Args({10, 10007, 4})
    ->Args({10, 20011, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_ModHarmonicSums)
    ->Args({8, static_cast<int>(Engine::Horizontal), 1})
    ->Args({8, static_cast<int>(Engine::Vertical), 1})
    ->Args({8, static_cast<int>(Engine::Tree), 1})
    ->Args({8, static_cast<int>(Engine::Tree), 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_MitmScan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Pipeline)->Args({7, 20, 1})->Args({7, 20, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
