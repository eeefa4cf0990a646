// Serial reference vs OpenMP kernels for candidate evaluation and Hilbert
// symbol tables. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "bmo/sampling.hpp"

namespace {

using namespace bmo;

std::vector<SampleCandidate> batch_up_to(int height) {
  std::vector<SampleCandidate> out;
  for (int h = 1; h <= height; ++h) {
    const auto layer = candidates_of_height(h, {0, 1, -1, 3, -3});
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const BrauerClass a = build_class_A();
  const auto batch = batch_up_to(static_cast<int>(state.range(0)));
  const RationalPlace v = RationalPlace::prime(3);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_candidates_serial(a, v, batch));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch.size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
  const BrauerClass a = build_class_A();
  const auto batch = batch_up_to(static_cast<int>(state.range(0)));
  const RationalPlace v = RationalPlace::prime(3);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_candidates_parallel(a, v, batch));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch.size()));
}

const std::vector<RationalPlace> kPlaces{RationalPlace::real(), RationalPlace::prime(2),
                                         RationalPlace::prime(3), RationalPlace::prime(5),
                                         RationalPlace::prime(7)};

void BM_HilbertSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_table_serial(static_cast<int>(state.range(0)), kPlaces));
  }
}

void BM_HilbertParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_table_parallel(static_cast<int>(state.range(0)), kPlaces));
  }
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertSerial)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HilbertParallel)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
