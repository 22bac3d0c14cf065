// Parallel kernels against their serial references.

#include <deutsch/series.hpp>
#include <deutsch/strip.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using deutsch::BigInt;
using deutsch::series::ZSeries;
using deutsch::strip::Direction;
using deutsch::strip::StripSpec;

ZSeries random_series(std::size_t order, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<BigInt> c(order + 1);
    for (auto& v : c) {
        v = static_cast<unsigned long>(rng());
        v *= static_cast<unsigned long>(rng());
    }
    return ZSeries(std::move(c));
}

void BM_SeriesMultiply(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const ZSeries a = random_series(order, 1);
    const ZSeries b = random_series(order, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}

void BM_SeriesMultiplyReference(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const ZSeries a = random_series(order, 1);
    const ZSeries b = random_series(order, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(deutsch::series::multiply_reference(a, b));
    }
}

void BM_DpCounts(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = state.range(1) == 0 ? Direction::LeftToRight : Direction::RightToLeft;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deutsch::strip::dp_counts(d, n, StripSpec::unbounded()));
    }
}

void BM_DpCountsReference(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = state.range(1) == 0 ? Direction::LeftToRight : Direction::RightToLeft;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deutsch::strip::dp_counts_reference(d, n, StripSpec::unbounded()));
    }
}

void BM_Stabilized(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(deutsch::strip::stabilized(Direction::RightToLeft, 3, order));
    }
}

} // namespace

BENCHMARK(BM_SeriesMultiply)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_SeriesMultiplyReference)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_DpCounts)->ArgsProduct({{50, 200}, {0, 1}});
BENCHMARK(BM_DpCountsReference)->ArgsProduct({{50, 200}, {0, 1}});
BENCHMARK(BM_Stabilized)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
