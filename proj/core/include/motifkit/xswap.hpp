#pragma once

#include <cstdint>
#include <vector>

#include "motifkit/graph.hpp"

namespace motifkit {

// Raised when the input graph has no edges at all; anything with at least
// one edge degrades gracefully (see SwapOutcome::degenerate).
struct TooFewEdges : GraphError {
    using GraphError::GraphError;
};

struct SwapConfig {
    double swap_factor = 10.0;  // attempts = ceil(swap_factor * |E|), must be > 0
    std::uint64_t seed = 0;
};

struct SwapOutcome {
    PropertyDigraph graph;
    std::size_t attempts = 0;
    std::size_t accepted = 0;
    // True when no swap was accepted (single edge, 2-cycle, or plain bad
    // luck on a tiny graph); the output then equals the input.
    bool degenerate = false;

    double acceptance_rate() const noexcept {
        return attempts == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(attempts);
    }
};

// Degree-preserving randomization. Each attempt draws two distinct edges
// (a,b), (c,d) and rewires them to (a,d), (c,b) iff that creates no
// self-loop and neither replacement edge already exists. Vertex attributes
// are untouched; each edge's attribute map follows its source endpoint.
// In/out degree sequences are preserved exactly.
SwapOutcome xswap(const PropertyDigraph& g, const SwapConfig& cfg);

struct NullEnsemble {
    std::vector<PropertyDigraph> samples;
    std::vector<std::uint64_t> seeds;        // per-sample derived seeds
    std::vector<double> acceptance_rates;    // per-sample accepted/attempts
    SwapConfig config;                        // the requested configuration
    std::uint64_t source_digest = 0;          // structural_digest of the source
};

// Generates n_samples independent randomizations of g. Sample i uses
// derive_seed(cfg.seed, i), so the ensemble is bit-identical for any
// worker count. workers = 0 means hardware concurrency.
NullEnsemble build_ensemble(const PropertyDigraph& g,
                            const SwapConfig& cfg,
                            std::size_t n_samples,
                            unsigned workers = 0);

} // namespace motifkit
