#pragma once

// Shared fixtures for the test suite: tiny literal graphs, seeded random
// hosts and motifs, planted-motif hosts for the discovery tests, and a
// scratch-directory guard for CLI runs.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "motifkit/graph.hpp"
#include "motifkit/motif.hpp"
#include "motifkit/rng.hpp"

namespace support {

using motifkit::AttributeMap;
using motifkit::AttributeValue;
using motifkit::PropertyDigraph;

inline PropertyDigraph from_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
    PropertyDigraph::Builder b;
    for (const auto& [s, d] : edges) b.add_edge(s, d);
    return b.build();
}

inline std::string vertex_name(std::size_t i) {
    return "v" + std::to_string(i);
}

// Uniform random simple digraph with exactly `edges` edges when that many
// fit, ids v0..v{n-1} in index order.
inline PropertyDigraph erdos_renyi(std::size_t n, std::size_t edges, std::uint64_t seed) {
    motifkit::SplitMix64 rng(seed);
    PropertyDigraph::Builder b;
    for (std::size_t i = 0; i < n; ++i) b.add_vertex(vertex_name(i));
    const std::size_t cap = n * (n - 1);
    std::size_t placed = 0;
    while (placed < edges && placed < cap) {
        const auto s = static_cast<motifkit::VertexIndex>(rng.below(n));
        const auto d = static_cast<motifkit::VertexIndex>(rng.below(n));
        if (s == d) continue;
        if (b.add_edge(s, d)) ++placed;
    }
    return b.build();
}

// Random attributed host for oracle comparisons: mixes typed, missing,
// and deliberately mistyped attribute values.
inline PropertyDigraph random_host(motifkit::SplitMix64& rng) {
    const std::size_t n = 2 + rng.below(9);       // 2..10 vertices
    const std::size_t m = 1 + rng.below(30);      // up to 30 edges attempted
    static const char* types[] = {"KC", "PN", "LN"};
    PropertyDigraph::Builder b;
    for (std::size_t i = 0; i < n; ++i) {
        AttributeMap attrs;
        if (rng.below(4) != 0) {
            attrs.emplace("type", AttributeValue(std::string(types[rng.below(3)])));
        }
        switch (rng.below(4)) {
            case 0: break;  // weight missing
            case 1: attrs.emplace("weight", AttributeValue(static_cast<std::int64_t>(rng.below(10)))); break;
            case 2: attrs.emplace("weight", AttributeValue(0.5 * static_cast<double>(rng.below(20)))); break;
            case 3: attrs.emplace("weight", AttributeValue(std::string("heavy"))); break;
        }
        b.add_vertex(vertex_name(i), std::move(attrs));
    }
    for (std::size_t t = 0; t < m; ++t) {
        const auto s = static_cast<motifkit::VertexIndex>(rng.below(n));
        const auto d = static_cast<motifkit::VertexIndex>(rng.below(n));
        if (s != d) b.add_edge(s, d);
    }
    return b.build();
}

// Random valid motif on 2..max_size vertices: a spanning tree of directed
// or undirected constraints keeps it connected, plus optional extra
// directed, forbidden, or undirected constraints on free pairs, optional
// predicates, and a coin-flip induced mode.
inline motifkit::MotifQuery random_motif(motifkit::SplitMix64& rng, std::size_t max_size = 4) {
    using motifkit::EdgeKind;
    motifkit::MotifQuery q;
    const std::size_t k = 2 + rng.below(max_size - 1);
    for (std::size_t i = 0; i < k; ++i) q.vertices.push_back(std::string(1, char('A' + i)));

    // pair_state[i][j]: 0 free, 1 directed i->j, 2 forbidden i->j; an
    // undirected pair marks both directions taken.
    int state[8][8] = {};
    auto pair_free = [&](std::size_t a, std::size_t b) { return state[a][b] == 0 && state[b][a] == 0; };

    for (std::size_t i = 1; i < k; ++i) {
        const std::size_t j = rng.below(i);
        const bool directed = rng.below(2) == 0;
        const bool flip = rng.below(2) == 0;
        const std::size_t s = flip ? i : j;
        const std::size_t d = flip ? j : i;
        q.edges.push_back({q.vertices[s], q.vertices[d],
                           directed ? EdgeKind::directed : EdgeKind::undirected});
        state[s][d] = 1;
        if (!directed) state[d][s] = 1;
    }
    const std::size_t extras = rng.below(3);
    for (std::size_t t = 0; t < extras; ++t) {
        const std::size_t a = rng.below(k);
        const std::size_t b = rng.below(k);
        if (a == b) continue;
        switch (rng.below(3)) {
            case 0:  // directed a->b if that direction is free and b->a is not undirected
                if (state[a][b] == 0) {
                    q.edges.push_back({q.vertices[a], q.vertices[b], EdgeKind::directed});
                    state[a][b] = 1;
                }
                break;
            case 1:  // forbidden a->b under the same freedom rule
                if (state[a][b] == 0) {
                    q.edges.push_back({q.vertices[a], q.vertices[b], EdgeKind::forbidden});
                    state[a][b] = 2;
                }
                break;
            case 2:
                if (pair_free(a, b)) {
                    q.edges.push_back({q.vertices[a], q.vertices[b], EdgeKind::undirected});
                    state[a][b] = state[b][a] = 1;
                }
                break;
        }
    }

    if (rng.below(2) == 0) {
        static const char* types[] = {"KC", "PN", "LN"};
        q.predicates.push_back({q.vertices[rng.below(k)], "type",
                                rng.below(2) == 0 ? motifkit::PredicateOp::eq
                                                  : motifkit::PredicateOp::ne,
                                AttributeValue(std::string(types[rng.below(3)]))});
    }
    if (rng.below(3) == 0) {
        static const motifkit::PredicateOp ops[] = {
            motifkit::PredicateOp::lt, motifkit::PredicateOp::le,
            motifkit::PredicateOp::gt, motifkit::PredicateOp::ge};
        q.predicates.push_back({q.vertices[rng.below(k)], "weight", ops[rng.below(4)],
                                AttributeValue(static_cast<std::int64_t>(rng.below(10)))});
    }
    q.induced = rng.below(3) == 0;
    return q;
}

// Host with `copies` disjoint feed-forward triangles over a sparse random
// background; the triangle stands far above anything degree-preserving
// randomization produces.
inline PropertyDigraph planted_feed_forward(std::size_t copies, std::size_t background_vertices,
                                            std::size_t background_edges, std::uint64_t seed) {
    motifkit::SplitMix64 rng(seed);
    PropertyDigraph::Builder b;
    for (std::size_t c = 0; c < copies; ++c) {
        const std::string a = "t" + std::to_string(c) + "a";
        const std::string mid = "t" + std::to_string(c) + "b";
        const std::string z = "t" + std::to_string(c) + "c";
        b.add_edge(a, mid);
        b.add_edge(mid, z);
        b.add_edge(a, z);
    }
    for (std::size_t i = 0; i < background_vertices; ++i) b.add_vertex("bg" + std::to_string(i));
    std::size_t placed = 0;
    while (placed < background_edges) {
        const std::string s = "bg" + std::to_string(rng.below(background_vertices));
        const std::string d = "bg" + std::to_string(rng.below(background_vertices));
        if (s == d) continue;
        if (b.add_edge(s, d)) ++placed;
    }
    // Sparse links so the host is not a disjoint giveaway.
    for (std::size_t c = 0; c + 1 < copies; c += 7) {
        b.add_edge("t" + std::to_string(c) + "c", "bg" + std::to_string(c % background_vertices));
    }
    return b.build();
}

// Host with `copies` disjoint directed 3-cycles over a sparse background.
inline PropertyDigraph planted_cycles(std::size_t copies, std::size_t background_vertices,
                                      std::size_t background_edges, std::uint64_t seed) {
    motifkit::SplitMix64 rng(seed);
    PropertyDigraph::Builder b;
    for (std::size_t c = 0; c < copies; ++c) {
        const std::string a = "c" + std::to_string(c) + "a";
        const std::string mid = "c" + std::to_string(c) + "b";
        const std::string z = "c" + std::to_string(c) + "c";
        b.add_edge(a, mid);
        b.add_edge(mid, z);
        b.add_edge(z, a);
    }
    for (std::size_t i = 0; i < background_vertices; ++i) b.add_vertex("bg" + std::to_string(i));
    std::size_t placed = 0;
    while (placed < background_edges) {
        const std::string s = "bg" + std::to_string(rng.below(background_vertices));
        const std::string d = "bg" + std::to_string(rng.below(background_vertices));
        if (s == d) continue;
        if (b.add_edge(s, d)) ++placed;
    }
    return b.build();
}

// Self-removing scratch directory.
class TempDir {
public:
    TempDir() {
        const auto base = std::filesystem::temp_directory_path();
        for (;;) {
            auto candidate = base / ("motifkit_test_" + std::to_string(::getpid()) + "_" +
                                     std::to_string(counter_++));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline std::uint64_t counter_ = 0;
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace support
