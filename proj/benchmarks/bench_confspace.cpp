#include <benchmark/benchmark.h>

#include "confspace/connectivity.hpp"
#include "confspace/homology.hpp"
#include "confspace/spanning.hpp"

using namespace confspace;

namespace {

void complex_k5(benchmark::State& state) {
    const Graph g = graphs::complete(5);
    const int n = static_cast<int>(state.range(0));
    const Graph s = n >= 3 ? sufficiently_subdivide(g, n).graph : g;
    for (auto _ : state) benchmark::DoNotOptimize(CellComplex(s, n));
}
BENCHMARK(complex_k5)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void h1_star(benchmark::State& state) {
    const int E = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    const CellComplex c(graphs::star(E, std::max(1, n - 1)), n);
    for (auto _ : state) benchmark::DoNotOptimize(h1(c));
}
BENCHMARK(h1_star)->Args({4, 3})->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);

void h1_two_particles(benchmark::State& state) {
    const Graph g = state.range(0) ? graphs::complete_bipartite(3, 3) : graphs::petersen();
    const CellComplex c(g, 2);
    for (auto _ : state) benchmark::DoNotOptimize(h1(c));
}
BENCHMARK(h1_two_particles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void predict(benchmark::State& state) {
    const Graph g = graphs::petersen();
    for (auto _ : state) benchmark::DoNotOptimize(predict_h1(g, 2));
}
BENCHMARK(predict)->Unit(benchmark::kMicrosecond);

void spanning_k5(benchmark::State& state) {
    const Graph g = graphs::complete(5);
    const CellComplex c(g, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_spanning(spanning_set(g, 2), c));
}
BENCHMARK(spanning_k5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
