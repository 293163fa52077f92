#include <benchmark/benchmark.h>

#include "pclab/complexity.hpp"
#include "pclab/oracles.hpp"
#include "pclab/reductions.hpp"
#include "pclab/walkcheck.hpp"

using namespace pclab;

static void BM_SolveXY(benchmark::State& state) {
    for (auto _ : state) {
        auto [x, y] = solve_xy(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(x);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_SolveXY)->Arg(12)->Arg(60)->Arg(200);

static void BM_AlphaMinDirect(benchmark::State& state) {
    for (auto _ : state) {
        Rational v = alpha_min_direct(static_cast<int>(state.range(0)), make_rational(1, 2));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_AlphaMinDirect)->Arg(7)->Arg(13);

static void BM_DecideCycle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g(n, false);
    for (int v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
        g.add_edge(v, (v + 2) % n);
    }
    ProblemTag tag = parse_tag("Cycle<=5");
    for (auto _ : state) benchmark::DoNotOptimize(decide(g, tag, {}));
}
BENCHMARK(BM_DecideCycle)->Arg(8)->Arg(12);

static void BM_ColorCodeSweep(benchmark::State& state) {
    Graph g = make_graph(5, true, {{0, 2}, {2, 3}, {3, 1}, {1, 4}});
    auto src = make_instance(oracle_for(g), parse_tag("DirPath_st=3"), {0, 1});
    auto params = color_code_params(src, ColorMode::path_st, 3);
    BigInt space = tape_space_size(params);
    ProblemTag dst = parse_tag("Path_st=3");
    for (auto _ : state) {
        long long yes = 0;
        for (BigInt i = 0; i < space; ++i) {
            auto derived = color_code(src, ColorMode::path_st, 3, tape_at(params, i), dst);
            if (decide(derived.instance)) ++yes;
        }
        benchmark::DoNotOptimize(yes);
    }
}
BENCHMARK(BM_ColorCodeSweep);

static void BM_JohnsonGap(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(johnson_gap_computed(static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_JohnsonGap)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
