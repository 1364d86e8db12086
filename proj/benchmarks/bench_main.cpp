#include <benchmark/benchmark.h>

#include "pcp/algo13.hpp"
#include "pcp/hull.hpp"
#include "pcp/oracle.hpp"
#include "pcp/partitioner.hpp"
#include "pcp/pointgen.hpp"

namespace {

pcp::PointSet uniform_set(int n, std::uint64_t seed) {
    pcp::GenSpec spec;
    spec.kind = pcp::GenKind::Uniform;
    spec.n = n;
    spec.seed = seed;
    return pcp::generate(spec);
}

void BM_ConvexLayers13(benchmark::State& state) {
    auto s = uniform_set(13, 7);
    for (auto _ : state) benchmark::DoNotOptimize(pcp::convex_layers(s));
}
BENCHMARK(BM_ConvexLayers13);

void BM_Partition13(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        state.PauseTiming();
        auto s = uniform_set(13, seed++);
        state.ResumeTiming();
        benchmark::DoNotOptimize(pcp::partition_13(s));
    }
}
BENCHMARK(BM_Partition13);

void BM_VerifyPartition13(benchmark::State& state) {
    auto s = uniform_set(13, 11);
    auto p = pcp::partition_13(s);
    for (auto _ : state) benchmark::DoNotOptimize(pcp::verify_partition(s, p));
}
BENCHMARK(BM_VerifyPartition13);

void BM_PartitionAny100(benchmark::State& state) {
    auto s = uniform_set(100, 3);
    for (auto _ : state) benchmark::DoNotOptimize(pcp::partition_any(s));
}
BENCHMARK(BM_PartitionAny100);

void BM_Oracle13(benchmark::State& state) {
    auto s = uniform_set(13, 5);
    pcp::SearchBudget budget;
    for (auto _ : state) benchmark::DoNotOptimize(pcp::min_partition(s, budget));
}
BENCHMARK(BM_Oracle13);

}  // namespace

BENCHMARK_MAIN();
