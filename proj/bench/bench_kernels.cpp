// Reference composition versus the fused OpenMP kernel.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "bmatrix/experiment.hpp"
#include "bmatrix/kernels.hpp"

namespace {

struct Network {
  std::vector<bmatrix::BipolarVector> memories;
  bmatrix::ProximityMatrix proximity;
  bmatrix::TMatrix t;
};

Network make_network(std::size_t n, std::size_t m) {
  auto draw = bmatrix::draw_trial(n, m, 1, 0);
  auto t = bmatrix::train(n, draw.memories);
  return {std::move(draw.memories), std::move(draw.proximity), std::move(t)};
}

void BM_ScanReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Network net = make_network(n, n / 10 + 1);
  for (auto _ : state) {
    auto map = bmatrix::scan_generators_reference(net.t, net.proximity, net.memories);
    benchmark::DoNotOptimize(map);
  }
  state.SetComplexityN(state.range(0));
}

void BM_ScanFusedSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Network net = make_network(n, n / 10 + 1);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  for (auto _ : state) {
    auto map = bmatrix::scan_generators(net.t, net.proximity, net.memories);
    benchmark::DoNotOptimize(map);
  }
  omp_set_num_threads(saved);
  state.SetComplexityN(state.range(0));
}

void BM_ScanFusedParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Network net = make_network(n, n / 10 + 1);
  for (auto _ : state) {
    auto map = bmatrix::scan_generators(net.t, net.proximity, net.memories);
    benchmark::DoNotOptimize(map);
  }
  state.counters["threads"] = omp_get_max_threads();
  state.SetComplexityN(state.range(0));
}

void BM_Experiment(benchmark::State& state) {
  bmatrix::ExperimentConfig config;
  config.neurons = static_cast<std::size_t>(state.range(0));
  config.memories = config.neurons / 2;
  config.iterations = 4;
  for (auto _ : state) {
    auto curves = bmatrix::run_experiment(config);
    benchmark::DoNotOptimize(curves);
  }
}

}  // namespace

BENCHMARK(BM_ScanReference)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(BM_ScanFusedSerial)->RangeMultiplier(2)->Range(16, 512)->Complexity();
BENCHMARK(BM_ScanFusedParallel)->RangeMultiplier(2)->Range(16, 512)->Complexity();
BENCHMARK(BM_Experiment)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
