#include <benchmark/benchmark.h>

#include "mono/constructions.hpp"
#include "mono/search.hpp"
#include "mono/search_reference.hpp"

namespace {

// complete_minus_circulant(side, side, d); d = 0 is the complete graph
mono::BipartiteGraph host_for(std::int64_t side, std::int64_t d)
{
    return mono::complete_minus_circulant(static_cast<std::size_t>(side), static_cast<std::size_t>(side), static_cast<std::size_t>(d));
}

// Threshold just above the optimum, so the search has to finish the whole tree.
mono::ComponentGoal hard_goal(const mono::BipartiteGraph& g, std::size_t r)
{
    mono::SearchConfig cfg;
    cfg.split_depth = 6;
    const auto best = mono::min_max_mono_component(g, r, cfg);
    return mono::ComponentGoal::order_at_least(mono::Rational(static_cast<long>(*best.value)));
}

void BM_Serial(benchmark::State& state)
{
    const auto g = host_for(state.range(0), state.range(1));
    const std::size_t r = static_cast<std::size_t>(state.range(2));
    const auto goal = hard_goal(g, r);
    for (auto _ : state)
        benchmark::DoNotOptimize(mono::reference::find_avoiding_coloring_serial(g, r, goal, true));
}

void BM_Parallel(benchmark::State& state)
{
    const auto g = host_for(state.range(0), state.range(1));
    const std::size_t r = static_cast<std::size_t>(state.range(2));
    const auto goal = hard_goal(g, r);
    mono::SearchConfig cfg;
    cfg.split_depth = 8;
    cfg.workers = static_cast<std::size_t>(state.range(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(mono::find_avoiding_coloring(g, r, goal, cfg));
}

}  // namespace

BENCHMARK(BM_Serial)->Args({8, 4, 3})->Args({7, 2, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)
    ->Args({8, 4, 3, 1})->Args({8, 4, 3, 4})
    ->Args({7, 2, 3, 1})->Args({7, 2, 3, 2})->Args({7, 2, 3, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
