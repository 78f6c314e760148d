#include <benchmark/benchmark.h>

#include "reconf/cliques.hpp"
#include "reconf/coloring.hpp"
#include "reconf/corpus.hpp"
#include "reconf/reconf_graph.hpp"
#include "reconf/reconstruct.hpp"

using namespace reconf;

namespace {

Graph dense_graph(int n) {
    // deterministic mid-density graph
    return generate_corpus(Family::RandomGnp, n, 1, 4242, 0.5).front();
}

void bm_enumerate_cliques(benchmark::State& state) {
    Graph g = dense_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cs = enumerate_k_cliques(g, 3);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(bm_enumerate_cliques)->Arg(16)->Arg(32)->Arg(64);

void bm_maximal_cliques(benchmark::State& state) {
    Graph g = dense_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cs = maximal_cliques(g);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(bm_maximal_cliques)->Arg(16)->Arg(32)->Arg(64);

void bm_build_ts(benchmark::State& state) {
    Graph g = dense_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto t = build_ts(g, 3);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_build_ts)->Arg(12)->Arg(16)->Arg(20);

void bm_build_simplex(benchmark::State& state) {
    Graph g = dense_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto t = build_simplex(g);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_build_simplex)->Arg(10)->Arg(14)->Arg(18);

void bm_chromatic_johnson(benchmark::State& state) {
    Graph j = johnson(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto c = chromatic_number(j);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_chromatic_johnson)->Arg(5)->Arg(6)->Arg(7);

void bm_reconstruct(benchmark::State& state) {
    Graph g = dense_graph(static_cast<int>(state.range(0)));
    int k = clique_number(g);
    Graph t = build_tj(g, k).graph;
    for (auto _ : state) {
        auto h = reconstruct_ts(t, k);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(bm_reconstruct)->Arg(10)->Arg(14)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
