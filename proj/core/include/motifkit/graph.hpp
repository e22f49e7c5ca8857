#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "motifkit/attribute.hpp"

namespace motifkit {

using VertexIndex = std::uint32_t;

struct Edge {
    VertexIndex src;
    VertexIndex dst;
    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const {
        return src != o.src ? src < o.src : dst < o.dst;
    }
};

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple digraph with per-vertex and per-edge attribute maps.
// Vertex ids are opaque strings mapped to dense indices at construction;
// the mapping is stable (insertion order) and exported in all results.
//
// Invariants, enforced at construction:
//   - no self-loops, no duplicate directed edges
//   - every edge endpoint exists
//   - in_adjacency is the exact transpose of out_adjacency
//
// Instances are safely shareable across threads once built.
class PropertyDigraph {
public:
    class Builder;

    // The empty graph; populated instances come from a Builder.
    PropertyDigraph() = default;

    std::size_t vertex_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_id(VertexIndex v) const { return ids_[v]; }
    const std::vector<std::string>& vertex_ids() const noexcept { return ids_; }

    std::optional<VertexIndex> find_vertex(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::span<const VertexIndex> out_neighbors(VertexIndex v) const {
        return {out_adj_[v].data(), out_adj_[v].size()};
    }
    std::span<const VertexIndex> in_neighbors(VertexIndex v) const {
        return {in_adj_[v].data(), in_adj_[v].size()};
    }
    std::size_t out_degree(VertexIndex v) const { return out_adj_[v].size(); }
    std::size_t in_degree(VertexIndex v) const { return in_adj_[v].size(); }

    bool has_edge(VertexIndex src, VertexIndex dst) const;

    // Edges in construction order; xswap relies on this being a stable list.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const AttributeMap& vertex_attributes(VertexIndex v) const { return vertex_attrs_[v]; }
    const AttributeValue* vertex_attribute(VertexIndex v, const std::string& key) const {
        auto it = vertex_attrs_[v].find(key);
        return it == vertex_attrs_[v].end() ? nullptr : &it->second;
    }
    const AttributeMap* edge_attributes(VertexIndex src, VertexIndex dst) const;

    // (in_degrees, out_degrees) keyed by vertex id.
    std::pair<std::map<std::string, std::size_t>, std::map<std::string, std::size_t>>
    degree_sequences() const;

    // FNV-1a over the sorted structure (vertex ids and edge id pairs),
    // attribute-blind. Used as ensemble provenance.
    std::uint64_t structural_digest() const;

    bool operator==(const PropertyDigraph& other) const;

private:
    friend class Builder;

    std::vector<std::string> ids_;
    std::unordered_map<std::string, VertexIndex> index_;
    std::vector<AttributeMap> vertex_attrs_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, AttributeMap> edge_attrs_;
    std::vector<std::vector<VertexIndex>> out_adj_;  // sorted
    std::vector<std::vector<VertexIndex>> in_adj_;   // sorted

    static std::uint64_t edge_key(VertexIndex s, VertexIndex d) noexcept {
        return (static_cast<std::uint64_t>(s) << 32) | d;
    }
};

class PropertyDigraph::Builder {
public:
    // Returns the (possibly pre-existing) dense index for id.
    VertexIndex add_vertex(const std::string& id);
    VertexIndex add_vertex(const std::string& id, AttributeMap attrs);

    void set_vertex_attributes(VertexIndex v, AttributeMap attrs);

    // Throws GraphError on self-loops. Returns false (and leaves the graph
    // unchanged) for a duplicate directed edge.
    bool add_edge(VertexIndex src, VertexIndex dst, AttributeMap attrs = {});
    bool add_edge(const std::string& src, const std::string& dst, AttributeMap attrs = {});

    bool has_vertex(const std::string& id) const { return g_.index_.contains(id); }
    std::size_t vertex_count() const noexcept { return g_.ids_.size(); }
    std::size_t edge_count() const noexcept { return g_.edges_.size(); }

    PropertyDigraph build();

private:
    PropertyDigraph g_;
    std::unordered_map<std::uint64_t, std::size_t> edge_set_;
};

} // namespace motifkit
