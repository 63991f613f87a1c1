#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "k3count/admissible.hpp"
#include "k3count/counting.hpp"
#include "k3count/cremona.hpp"

namespace {

void BM_CountConvolution(benchmark::State& state)
{
    const int budget = static_cast<int>(state.range(0));
    const k3count::CountQuery query{k3count::Surface::K3, 1, budget - 1};
    const auto config = k3count::CountingConfig::with_budgets(budget, budget);
    for (auto _ : state)
        benchmark::DoNotOptimize(k3count::count_convolution(query, config));
}
BENCHMARK(BM_CountConvolution)->Arg(4)->Arg(6)->Arg(8)->Arg(9);

void BM_CountByComponents(benchmark::State& state)
{
    const int budget = static_cast<int>(state.range(0));
    const k3count::CountQuery query{k3count::Surface::K3, 1, budget - 1};
    const auto config = k3count::CountingConfig::with_budgets(budget, budget);
    for (auto _ : state)
        benchmark::DoNotOptimize(k3count::count_by_components(query, 256, config));
}
BENCHMARK(BM_CountByComponents)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_EnumerateAdmissible(benchmark::State& state)
{
    const int magnitude = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(k3count::enumerate_admissible(magnitude));
}
BENCHMARK(BM_EnumerateAdmissible)->Arg(6)->Arg(8)->Arg(10);

void BM_ReduceScrambled(benchmark::State& state)
{
    std::mt19937 rng(7u);
    std::vector<k3count::BlowupClass> inputs;
    for (int round = 0; round < 64; ++round)
        inputs.push_back(k3count::scramble_class(
            k3count::section_class(static_cast<long long>(rng() % 10)), 10, rng));
    std::size_t next = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(k3count::reduce_to_section_class(inputs[next]));
        next = (next + 1) % inputs.size();
    }
}
BENCHMARK(BM_ReduceScrambled);

} // namespace

BENCHMARK_MAIN();
