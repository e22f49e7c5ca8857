#include <benchmark/benchmark.h>

#include <string>

#include "motifkit/canonical.hpp"
#include "motifkit/motif.hpp"

using namespace motifkit;

namespace {

const std::string five_cycle =
    "A -> B\nB -> C\nC -> D\nD -> E\nE -> A\n"
    "A.type = \"KC\"\nB.weight >= 2.5\n";

void parse_motif_bench(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_motif(five_cycle));
    }
}

void round_trip(benchmark::State& state) {
    const MotifQuery q = parse_motif(five_cycle);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_motif(pretty_print(q)));
    }
}

void canonical_label(benchmark::State& state) {
    // Worst case for the permutation search: symmetric 8-vertex ring.
    std::string ring;
    for (char c = 'A'; c <= 'H'; ++c) {
        ring += std::string(1, c) + " - " + (c == 'H' ? "A" : std::string(1, char(c + 1))) + "\n";
    }
    const MotifQuery q = parse_motif(ring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(q));
    }
}

} // namespace

BENCHMARK(parse_motif_bench);
BENCHMARK(round_trip);
BENCHMARK(canonical_label)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
