// Serial reference kernels against their OpenMP counterparts, and the
// branch-and-bound searches with one worker against all available workers.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "contgraph/covering.hpp"
#include "contgraph/grid.hpp"
#include "contgraph/kernels.hpp"
#include "contgraph/packing.hpp"

using namespace contgraph;

namespace {

const ContinuousGraph& k6()
{
    static const ContinuousGraph g = generate("complete", 6);
    return g;
}

void BM_GridDistancesSerial(benchmark::State& state)
{
    Grid grid(k6(), state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::grid_distances_serial(k6(), grid));
    state.counters["points"] = grid.size();
}

void BM_GridDistancesParallel(benchmark::State& state)
{
    Grid grid(k6(), state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::grid_distances_parallel(k6(), grid));
    state.counters["points"] = grid.size();
}

void BM_ThresholdSerial(benchmark::State& state)
{
    Grid grid(k6(), state.range(0));
    auto table = kernels::grid_distances_serial(k6(), grid);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::threshold_matrix_serial(table, Rational(1, 2), true));
}

void BM_ThresholdParallel(benchmark::State& state)
{
    Grid grid(k6(), state.range(0));
    auto table = kernels::grid_distances_serial(k6(), grid);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::threshold_matrix_parallel(table, Rational(1, 2), true));
}

// range(0) is the worker count; 0 means every OpenMP thread
void BM_Packing(benchmark::State& state)
{
    SearchOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_packing_grid_exact(k6(), Rational(1, 2), 4, opts));
    state.counters["threads"] = opts.threads > 0 ? opts.threads : omp_get_max_threads();
}

void BM_Cover(benchmark::State& state)
{
    SearchOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_cover_grid_exact(k6(), Rational(1, 2), 4, opts));
    state.counters["threads"] = opts.threads > 0 ? opts.threads : omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_GridDistancesSerial)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridDistancesParallel)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThresholdSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThresholdParallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Packing)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cover)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
