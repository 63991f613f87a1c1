#include <benchmark/benchmark.h>

#include "k3count/arith.hpp"
#include "k3count/modforms.hpp"
#include "k3count/series.hpp"

namespace {

k3count::TruncatedSeries unit_series(int order)
{
    std::vector<k3count::Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = k3count::Rational(n, n + 2);
    return k3count::TruncatedSeries(std::move(c), order);
}

void BM_SeriesMultiply(benchmark::State& state)
{
    const auto a = unit_series(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SeriesMultiply)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesInverse(benchmark::State& state)
{
    const auto a = unit_series(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(32)->Arg(64);

void BM_EtaProductInverse24(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(k3count::eta_product_inverse(24, order));
}
BENCHMARK(BM_EtaProductInverse24)->Arg(10)->Arg(20)->Arg(30);

void BM_K3GeneratingSeries(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(k3count::k3_generating_series(3, order));
}
BENCHMARK(BM_K3GeneratingSeries)->Arg(10)->Arg(20)->Arg(30);

void BM_PartitionSeries(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(k3count::partition_series(order));
}
BENCHMARK(BM_PartitionSeries)->Arg(25)->Arg(50)->Arg(100);

} // namespace

BENCHMARK_MAIN();
