#include <benchmark/benchmark.h>

#include <random>

#include "cforge/arith.hpp"
#include "cforge/congruence.hpp"
#include "cforge/gf2.hpp"
#include "cforge/partitions.hpp"
#include "cforge/qseries.hpp"

namespace {

using cforge::qseries::Series;

Series random_gf2(std::size_t trunc, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(density);
    std::vector<std::uint64_t> c(trunc);
    for (auto& x : c) x = bit(rng) ? 1 : 0;
    return Series::from_residues(2, std::move(c));
}

void BM_Gf2Packed(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_gf2(n, 0.05, 1), b = random_gf2(n, 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gf2Packed)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_Gf2Generic(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_gf2(n, 0.05, 1), b = random_gf2(n, 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(cforge::qseries::detail::mul_generic(a, b));
}
BENCHMARK(BM_Gf2Generic)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

void BM_EtaQuotient(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const cforge::qseries::EtaQuotientSpec spec{0, {{2, 4}, {12, 15}, {1, -8}, {6, -6}, {24, -6}}};
    for (auto _ : state) benchmark::DoNotOptimize(cforge::qseries::expand_eta_quotient(spec, n, 16));
}
BENCHMARK(BM_EtaQuotient)->Arg(2000)->Arg(10000);

void BM_OverpartitionSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cforge::partitions::overpartition_table(state.range(0), 16));
}
BENCHMARK(BM_OverpartitionSeries)->Arg(10000)->Arg(50000);

void BM_NuTableMod2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cforge::partitions::nu_table_dp(state.range(0), 3, 2));
}
BENCHMARK(BM_NuTableMod2)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DivisorSieve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cforge::arith::DivisorTables(state.range(0)));
}
BENCHMARK(BM_DivisorSieve)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_R36Certificate(benchmark::State& state) {
    const cforge::arith::DivisorTables t(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cforge::congruence::check_R36(t, state.range(0)));
}
BENCHMARK(BM_R36Certificate)->Arg(10000)->Arg(93312)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
