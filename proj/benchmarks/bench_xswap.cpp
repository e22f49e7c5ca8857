#include <benchmark/benchmark.h>

#include <cstdint>

#include "motifkit/graph.hpp"
#include "motifkit/rng.hpp"
#include "motifkit/xswap.hpp"

using namespace motifkit;

namespace {

PropertyDigraph random_digraph(std::size_t n, std::size_t edges, std::uint64_t seed) {
    SplitMix64 rng(seed);
    PropertyDigraph::Builder b;
    for (std::size_t i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
    std::size_t placed = 0;
    while (placed < edges) {
        const auto s = static_cast<VertexIndex>(rng.below(n));
        const auto d = static_cast<VertexIndex>(rng.below(n));
        if (s != d && b.add_edge(s, d)) ++placed;
    }
    return b.build();
}

void xswap_sample(benchmark::State& state) {
    const auto edges = static_cast<std::size_t>(state.range(0));
    const PropertyDigraph g = random_digraph(edges / 10, edges, 3);
    std::uint64_t seed = 0;
    std::size_t accepted = 0;
    for (auto _ : state) {
        accepted += xswap(g, {10.0, seed++}).accepted;
    }
    benchmark::DoNotOptimize(accepted);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(10 * edges));
}

void ensemble_build(benchmark::State& state) {
    const PropertyDigraph g = random_digraph(500, 5000, 9);
    const auto workers = static_cast<unsigned>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_ensemble(g, {10.0, seed++}, 20, workers));
    }
}

} // namespace

BENCHMARK(xswap_sample)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(ensemble_build)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
