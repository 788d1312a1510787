#include <benchmark/benchmark.h>

#include "dvote/analysis.hpp"
#include "dvote/bd_chain.hpp"
#include "dvote/coloring.hpp"
#include "dvote/exact.hpp"
#include "dvote/protocol.hpp"

using namespace dvote;

static void BM_StepCycle(benchmark::State& state) {
    Graph g = Graph::cycle(static_cast<int>(state.range(0)));
    Configuration base = init_configuration(g, ColoringSpec::half_arc());
    Rng rng(1);
    Configuration c = base;
    for (auto _ : state) {
        if (c.at_consensus()) c = base;
        benchmark::DoNotOptimize(step(c, Protocol::push, rng));
    }
}
BENCHMARK(BM_StepCycle)->Arg(100)->Arg(1000);

static void BM_StepComplete(benchmark::State& state) {
    Graph g = Graph::complete(static_cast<int>(state.range(0)));
    Configuration base = init_configuration(g, ColoringSpec::random_balanced(1));
    Rng rng(2);
    Configuration c = base;
    for (auto _ : state) {
        if (c.at_consensus()) c = base;
        benchmark::DoNotOptimize(step(c, Protocol::push, rng));
    }
}
BENCHMARK(BM_StepComplete)->Arg(64)->Arg(256);

static void BM_BruteForce(benchmark::State& state) {
    Graph g = Graph::star(static_cast<int>(state.range(0)));
    Configuration c = init_configuration(g, ColoringSpec::random_balanced(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_expected_time(g, c, Protocol::pull));
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_HitProfile(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(hit_profile(push_chain(static_cast<int>(state.range(0)), 0)));
}
BENCHMARK(BM_HitProfile)->Arg(4096)->Arg(1 << 20);

static void BM_DriftScan(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(drift_scan(static_cast<int>(state.range(0)), Protocol::push));
}
BENCHMARK(BM_DriftScan)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
