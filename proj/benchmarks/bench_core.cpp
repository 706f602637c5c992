#include <benchmark/benchmark.h>

#include "ctrlmode/alter.hpp"
#include "ctrlmode/control.hpp"
#include "ctrlmode/generate.hpp"
#include "ctrlmode/matching.hpp"

using namespace ctrlmode;

namespace {

DiGraph make_sf(NodeId n, double k, std::uint64_t seed) {
    GenParams p;
    p.n = n;
    p.k_avg = k;
    p.seed = seed;
    p.model = GenModel::sf;
    return generate(p);
}

void BM_Generate(benchmark::State& state) {
    const auto n = static_cast<NodeId>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto g = make_sf(n, 10.0, seed++);
        benchmark::DoNotOptimize(g.edge_count());
    }
}

void BM_MaximumMatching(benchmark::State& state) {
    const auto g = make_sf(static_cast<NodeId>(state.range(0)), 10.0, 1);
    for (auto _ : state) {
        const Matching m = maximum_matching(g);
        benchmark::DoNotOptimize(m.nu());
    }
}

void BM_Classify(benchmark::State& state) {
    const auto g = make_sf(static_cast<NodeId>(state.range(0)), 10.0, 1);
    const Matching m = maximum_matching(g);
    for (auto _ : state) {
        const Classification c = classify(g, m);
        benchmark::DoNotOptimize(c.input_count);
    }
}

void BM_ToCentralized(benchmark::State& state) {
    const auto g = make_sf(static_cast<NodeId>(state.range(0)), 15.0, 2);
    for (auto _ : state) {
        const RemovalPlan plan = to_centralized(g);
        benchmark::DoNotOptimize(plan.removals.size());
    }
}

void BM_ToDistributed(benchmark::State& state) {
    const auto g = make_sf(static_cast<NodeId>(state.range(0)), 25.0, 3);
    for (auto _ : state) {
        const RemovalPlan plan = to_distributed(g);
        benchmark::DoNotOptimize(plan.removals.size());
    }
}

}  // namespace

BENCHMARK(BM_Generate)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximumMatching)->Arg(2000)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->Arg(2000)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ToCentralized)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ToDistributed)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
