#include <benchmark/benchmark.h>

#include <cstdint>

#include "motifkit/engine.hpp"
#include "motifkit/graph.hpp"
#include "motifkit/motif.hpp"
#include "motifkit/rng.hpp"

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

void count_triangles(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PropertyDigraph g = random_digraph(n, 10 * n, 7);
    const MotifQuery q = parse_motif("A -> B\nB -> C\nC -> A");
    EngineOptions opts;
    opts.workers = static_cast<unsigned>(state.range(1));
    std::uint64_t total = 0;
    for (auto _ : state) {
        total += count_monomorphisms(q, g, opts).count;
    }
    benchmark::DoNotOptimize(total);
    state.counters["edges"] = static_cast<double>(g.edge_count());
}

void count_feed_forward(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PropertyDigraph g = random_digraph(n, 10 * n, 11);
    const MotifQuery q = parse_motif("A -> B\nB -> C\nA -> C");
    std::uint64_t total = 0;
    for (auto _ : state) {
        total += count_monomorphisms(q, g).count;
    }
    benchmark::DoNotOptimize(total);
}

void enumerate_paths(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PropertyDigraph g = random_digraph(n, 8 * n, 13);
    const MotifQuery q = parse_motif("A -> B\nB -> C");
    std::size_t total = 0;
    for (auto _ : state) {
        total += enumerate_monomorphisms(q, g).mappings.size();
    }
    benchmark::DoNotOptimize(total);
}

} // namespace

BENCHMARK(count_triangles)
    ->Args({1000, 1})
    ->Args({1000, 4})
    ->Args({10000, 1})
    ->Args({10000, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(count_feed_forward)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_paths)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
