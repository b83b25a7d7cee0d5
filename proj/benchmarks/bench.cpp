// Microbenchmarks for the hot paths: the cograph canonical pipeline (the
// one with a hard latency requirement), the exact small-graph canonizer,
// and the exhaustive oracle it backstops.
#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <variant>
#include <vector>

#include "giclass/cograph.hpp"
#include "giclass/graph.hpp"
#include "giclass/iso.hpp"
#include "giclass/modular.hpp"

namespace {

giclass::Graph random_graph(int n, std::mt19937_64& rng) {
    giclass::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) b.add_edge(u, v);
    return std::move(b).build();
}

void bench_cograph_canonical_pipeline(benchmark::State& state) {
    std::mt19937_64 rng(12345);
    giclass::Cotree t = giclass::random_cotree(static_cast<int>(state.range(0)), rng);
    giclass::Graph g = giclass::cotree_to_graph(t);
    for (auto _ : state) {
        auto res = giclass::build_cotree(g);
        benchmark::DoNotOptimize(giclass::canonical_code(std::get<giclass::Cotree>(res)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bench_cograph_canonical_pipeline)->Arg(100)->Arg(1000)->Arg(10000)->Complexity();

void bench_canonical_form_small(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<giclass::Graph> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_graph(static_cast<int>(state.range(0)), rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(giclass::canonical_form_small(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(bench_canonical_form_small)->DenseRange(5, 8);

void bench_brute_force_iso(benchmark::State& state) {
    std::mt19937_64 rng(11);
    const int n = static_cast<int>(state.range(0));
    giclass::Graph a = random_graph(n, rng);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    giclass::Graph b = giclass::apply_permutation(a, p);
    for (auto _ : state) benchmark::DoNotOptimize(giclass::brute_force_iso(a, b).isomorphic());
}
BENCHMARK(bench_brute_force_iso)->DenseRange(8, 16, 4);

void bench_md_canonical_code(benchmark::State& state) {
    // Union of many small primes: exercises the tree walk without hitting
    // the small-canon engine bound.
    giclass::Graph g(0, {});
    std::mt19937_64 rng(3);
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
        g = giclass::disjoint_union(g, random_graph(8, rng));
    for (auto _ : state) benchmark::DoNotOptimize(giclass::md_canonical_code(g));
}
BENCHMARK(bench_md_canonical_code)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
