#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifkit/stats.hpp"

namespace motifkit {

struct EnsembleFailure : GraphError {
    using GraphError::GraphError;
};

struct DiscoveryConfig {
    std::size_t size_min = 3;
    std::size_t size_max = 5;   // hard cap: max_motif_vertices
    std::size_t target_count = 1;
    SignificanceCriteria criteria;
    std::vector<std::string> attribute_keys;
    std::optional<TopologyClass> steer;
    std::uint64_t seed = 0;
    std::size_t n_samples = 100;
    double swap_factor = 10.0;
    std::size_t max_rounds = 10;
    std::size_t frontier_cap = 1000;
    std::chrono::milliseconds per_motif_budget{60000};
    unsigned workers = 0;
};

// Throws std::invalid_argument when a field is out of range.
void validate(const DiscoveryConfig& cfg);

enum class RefinementKind { seed, orient_edge, add_edge, add_attribute };

const char* refinement_kind_text(RefinementKind k);

struct CandidateMotif {
    MotifQuery query;
    std::string label;  // canonical form of query
    std::optional<MotifStatistics> stats;
    std::optional<std::string> parent;  // canonical label of the parent
    std::size_t round = 0;
    RefinementKind refinement_kind = RefinementKind::seed;
};

// All connected undirected motifs on `size` vertices (2..8), one candidate
// per isomorphism class, ordered by canonical label.
std::vector<CandidateMotif> seed_candidates(std::size_t size);

// One-step refinements of a significant candidate: every orientation of
// one undirected constraint, one new undirected edge (between an
// unconstrained pair, or to a fresh vertex while size < size_max), and one
// equality predicate per (vertex, key in cfg.attribute_keys) over the
// top-5 host values seen at that vertex's matched positions. Children are
// deduplicated by canonical form within the returned list.
std::vector<CandidateMotif> refine(const CandidateMotif& c,
                                   const DiscoveryConfig& cfg,
                                   const PropertyDigraph& g);

struct DiscoveryOutcome {
    // Isolated motifs, ranked by z descending, then smaller size, then
    // canonical label. Empty plus no_significant when nothing isolated.
    std::vector<CandidateMotif> ranked;
    // Every candidate that was scored, in scoring order; lineage chains
    // through parent labels terminate at a round-0 seed.
    std::vector<CandidateMotif> scored;
    std::vector<std::string> diagnostics;
    std::uint64_t ensemble_digest = 0;
    std::vector<std::uint64_t> ensemble_seeds;
    std::vector<double> ensemble_acceptance_rates;
    std::size_t rounds = 0;
    bool no_significant = false;
};

// Greedy progressive refinement against one shared null ensemble. A
// candidate is isolated once it is significant, fully directed, passes the
// steer filter, and no scored child is significant with strictly greater
// z. Deterministic for fixed (g, cfg).
DiscoveryOutcome discover(const PropertyDigraph& g, const DiscoveryConfig& cfg);

} // namespace motifkit
