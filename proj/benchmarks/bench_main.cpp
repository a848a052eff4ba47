#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "loplab/cycle_detect.hpp"
#include "loplab/lop.hpp"
#include "loplab/montecarlo.hpp"
#include "loplab/randgen.hpp"

using namespace loplab;

static void BM_GenEr(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream rng(1, t++);
    benchmark::DoNotOptimize(gen_er(n, 1.0 / static_cast<double>(n), rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_GenEr)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_GenRg(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double r = std::sqrt(1.5 / (std::numbers::pi * static_cast<double>(n)));
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream rng(2, t++);
    benchmark::DoNotOptimize(gen_rg(n, r, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_GenRg)->Arg(1000)->Arg(10000)->Arg(100000);

// Raw color coding for C_k on a random cubic-ish graph with no exact shortcuts.
static void BM_ColorCodingEq(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  RngStream gen(3, 0);
  const Graph g = gen_er(200, 3.0 / 200, gen);
  const DetectorOptions raw{.exact_block_analysis = false};
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream rng(4, t++);
    benchmark::DoNotOptimize(has_cycle_eq(g, k, 1, rng, raw));
  }
}
BENCHMARK(BM_ColorCodingEq)->DenseRange(6, 12, 2);

static void BM_PlopuViolation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream gen(5, t++);
    const Graph g = gen_er(n, 1.0 / static_cast<double>(n), gen);
    RngStream det = gen.fork(1);
    benchmark::DoNotOptimize(plopu_violation(g, 1000, det));
  }
}
BENCHMARK(BM_PlopuViolation)->Arg(1000)->Arg(10000);

static void BM_LopOracle(benchmark::State& state) {
  std::uint64_t t = 0;
  for (auto _ : state) {
    RngStream gen(6, t++);
    benchmark::DoNotOptimize(lop_oracle(gen_er(12, 0.3, gen)));
  }
}
BENCHMARK(BM_LopOracle);

static void BM_EstimateErPlopu(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.regime = {Model::ER, PowerLaw{1.1, 1.0}};
  cfg.n = 2000;
  cfg.samples = 20;
  cfg.iterations = 1000;
  cfg.properties = {Property::Plopu, Property::Giant, Property::PlopuGiant};
  for (auto _ : state) benchmark::DoNotOptimize(estimate(cfg, 1));
}
BENCHMARK(BM_EstimateErPlopu)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
