#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifkit/graph.hpp"
#include "motifkit/motif.hpp"

namespace motifkit {

struct EngineOptions {
    unsigned workers = 0;  // 0 = std::thread::hardware_concurrency()
    std::optional<std::chrono::milliseconds> timeout;
    std::optional<std::uint64_t> limit;  // enumeration only
};

enum class Truncation { none, timeout, limit };

struct MatchResult {
    std::uint64_t count = 0;
    bool truncated = false;
    Truncation reason = Truncation::none;
    std::chrono::milliseconds elapsed{0};
    // Complete assignments, host vertex per template vertex in template
    // order; filled by enumerate_monomorphisms only, sorted by the tuple
    // of host vertex ids so output is identical for any worker count.
    std::vector<std::vector<VertexIndex>> mappings;
};

// Binding order: every vertex after the first is constraint-connected
// (directed or undirected; forbidden edges do not connect) to an earlier
// one; ties broken by higher constraint degree, then by name.
std::vector<std::string> plan_order(const MotifQuery& q, const PropertyDigraph& g);

// A partial injective assignment, host vertex per already-bound position
// of the binding order. Tasks are never invalid: all constraints among
// bound vertices hold.
struct SearchTask {
    std::vector<VertexIndex> assignment;
    std::size_t next_index() const noexcept { return assignment.size(); }
};

// One child per host vertex that can legally bind order[next_index].
// Candidates come from the adjacency of an already-bound constraint
// neighbor whenever one exists; the first binding scans all host vertices
// through a degree-and-predicate prefilter.
std::vector<SearchTask> expand_task(const SearchTask& t, const MotifQuery& q,
                                    const PropertyDigraph& g,
                                    const std::vector<std::string>& order);

// Exact count of complete injective assignments satisfying every
// constraint; identical for all worker counts. Counts raw mappings, not
// divided by automorphisms.
MatchResult count_monomorphisms(const MotifQuery& q, const PropertyDigraph& g,
                                const EngineOptions& opts = {});

// As count_monomorphisms but materializes the assignments. With a limit
// the search runs sequentially and keeps the first `limit` matches in
// search order (still emitted sorted).
MatchResult enumerate_monomorphisms(const MotifQuery& q, const PropertyDigraph& g,
                                    const EngineOptions& opts = {});

} // namespace motifkit
