#include <benchmark/benchmark.h>

#include "semistrong/exact_solver.hpp"
#include "semistrong/tree_dp.hpp"

using namespace semistrong;

// Full program at budget max degree + 1 (no early exit).
static void BM_SolveTreeRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto delta = static_cast<std::size_t>(state.range(1));
    const RootedTree tree = root_tree(random_tree_bounded(n, delta, 1), 0);
    const std::size_t K = tree.graph().max_degree() + 1;
    for (auto _ : state) benchmark::DoNotOptimize(solve_tree(tree, K).feasible());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveTreeRandom)
    ->ArgsProduct({{25000, 50000, 100000, 200000}, {8}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);
BENCHMARK(BM_SolveTreeRandom)->ArgsProduct({{50000}, {3, 4, 6, 8, 10}})->Unit(benchmark::kMillisecond);

static void BM_SemistrongIndexTree(benchmark::State& state) {
    const Graph g = random_tree_bounded(static_cast<std::size_t>(state.range(0)), 8, 7);
    for (auto _ : state) benchmark::DoNotOptimize(semistrong_index_tree(g).index);
}
BENCHMARK(BM_SemistrongIndexTree)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_ExactDecideCycle(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decide(g, ColoringKind::semistrong, 3).outcome);
}
BENCHMARK(BM_ExactDecideCycle)->Arg(7)->Arg(11)->Arg(13);

BENCHMARK_MAIN();
