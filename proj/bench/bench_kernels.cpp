// Serial reference vs OpenMP path for the heavy sweeps.
// Arg 0 runs Exec::Serial, arg 1 runs Exec::Parallel.

#include <benchmark/benchmark.h>

#include "mactc/oracle.hpp"
#include "mactc/phase_optimizer.hpp"
#include "mactc/planner.hpp"
#include "mactc/rate_region.hpp"

using namespace mactc;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

const ChannelGains kChannel{5, 3, 1, 1.2, 2, 2};

void BM_OracleSum(benchmark::State& st) {
    OracleConfig cfg;
    cfg.power_grid_points = 32;
    for (auto _ : st) benchmark::DoNotOptimize(oracle_sum(kChannel, 0.2, 0.25, cfg, exec_of(st)).rate);
}

void BM_GridSum(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(grid_search_sum(kChannel, 0.05, exec_of(st)).best_rate);
}

void BM_Envelope(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(envelope_region(kChannel, 0.1, 5, exec_of(st)).size());
}

void BM_SumMap(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(sum_scheme_map(Topology{}, 0.2, 0.2, Bounds{}, 21, 2, 2, exec_of(st)).cells.size());
}

void BM_IndividualMap(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(
            individual_scheme_map(Topology{}, 0.5, Bounds{}, 101, 2, 2, exec_of(st)).cells.size());
}

}  // namespace

BENCHMARK(BM_OracleSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Envelope)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SumMap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IndividualMap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
