#include <benchmark/benchmark.h>

#include "shorcost/optimizer.hpp"
#include "shorcost/sim/deviation.hpp"

namespace {

using namespace shorcost;

void BM_OptimizeSerial(benchmark::State& state) {
    const auto problem = make_instance(Family::Rsa, static_cast<int>(state.range(0)));
    const EstimationContext ctx;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_serial(problem, ctx));
    }
}

void BM_OptimizeParallel(benchmark::State& state) {
    const auto problem = make_instance(Family::Rsa, static_cast<int>(state.range(0)));
    const EstimationContext ctx;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize(problem, ctx));
    }
}

sim::DeviationConfig bench_config() {
    sim::DeviationConfig c;
    c.n = 12;
    c.c_sep = 4;
    c.c_pad = 6;
    c.additions = 20;
    return c;
}

void BM_DeviationSerial(benchmark::State& state) {
    const auto c = bench_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim::measure_empirical_deviation_serial(c, state.range(0)));
    }
}

void BM_DeviationParallel(benchmark::State& state) {
    const auto c = bench_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim::measure_empirical_deviation(c, state.range(0)));
    }
}

}  // namespace

BENCHMARK(BM_OptimizeSerial)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeParallel)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DeviationSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeviationParallel)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
