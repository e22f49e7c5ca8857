#include "motifkit/graph.hpp"

#include <algorithm>
#include <charconv>

namespace motifkit {

std::string AttributeValue::to_text() const {
    switch (tag()) {
        case Tag::string:
            return as_string();
        case Tag::integer:
            return std::to_string(as_integer());
        case Tag::real: {
            char buf[32];
            auto [p, ec] = std::to_chars(buf, buf + sizeof buf, as_real());
            (void)ec;
            std::string s(buf, p);
            // keep the float tag visible so re-parsing does not demote to integer
            if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
            return s;
        }
        case Tag::boolean:
            return as_boolean() ? "true" : "false";
    }
    return {};
}

bool PropertyDigraph::has_edge(VertexIndex src, VertexIndex dst) const {
    const auto& row = out_adj_[src];
    return std::binary_search(row.begin(), row.end(), dst);
}

const AttributeMap* PropertyDigraph::edge_attributes(VertexIndex src, VertexIndex dst) const {
    auto it = edge_attrs_.find(edge_key(src, dst));
    return it == edge_attrs_.end() ? nullptr : &it->second;
}

std::pair<std::map<std::string, std::size_t>, std::map<std::string, std::size_t>>
PropertyDigraph::degree_sequences() const {
    std::map<std::string, std::size_t> in, out;
    for (VertexIndex v = 0; v < ids_.size(); ++v) {
        in[ids_[v]] = in_adj_[v].size();
        out[ids_[v]] = out_adj_[v].size();
    }
    return {std::move(in), std::move(out)};
}

namespace {

constexpr std::uint64_t fnv_offset = 14695981039346656037ull;
constexpr std::uint64_t fnv_prime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= fnv_prime;
    }
    h ^= 0xff;  // terminator so "ab","c" != "a","bc"
    h *= fnv_prime;
}

} // namespace

std::uint64_t PropertyDigraph::structural_digest() const {
    std::vector<std::string> vs = ids_;
    std::sort(vs.begin(), vs.end());
    std::vector<std::pair<std::string, std::string>> es;
    es.reserve(edges_.size());
    for (const auto& e : edges_) es.emplace_back(ids_[e.src], ids_[e.dst]);
    std::sort(es.begin(), es.end());

    std::uint64_t h = fnv_offset;
    for (const auto& v : vs) fnv_mix(h, v);
    h ^= 0xfe;
    h *= fnv_prime;
    for (const auto& [s, d] : es) {
        fnv_mix(h, s);
        fnv_mix(h, d);
    }
    return h;
}

bool PropertyDigraph::operator==(const PropertyDigraph& other) const {
    if (ids_.size() != other.ids_.size() || edges_.size() != other.edges_.size()) return false;

    // Vertices and attributes, id-keyed (index assignment may differ).
    for (VertexIndex v = 0; v < ids_.size(); ++v) {
        auto ov = other.find_vertex(ids_[v]);
        if (!ov) return false;
        if (vertex_attrs_[v] != other.vertex_attrs_[*ov]) return false;
    }
    for (const auto& e : edges_) {
        auto os = other.find_vertex(ids_[e.src]);
        auto od = other.find_vertex(ids_[e.dst]);
        if (!os || !od || !other.has_edge(*os, *od)) return false;
        const AttributeMap* a = edge_attributes(e.src, e.dst);
        const AttributeMap* b = other.edge_attributes(*os, *od);
        const bool a_empty = a == nullptr || a->empty();
        const bool b_empty = b == nullptr || b->empty();
        if (a_empty != b_empty) return false;
        if (!a_empty && *a != *b) return false;
    }
    return true;
}

VertexIndex PropertyDigraph::Builder::add_vertex(const std::string& id) {
    if (id.empty()) throw GraphError("vertex id must be non-empty");
    auto it = g_.index_.find(id);
    if (it != g_.index_.end()) return it->second;
    const auto v = static_cast<VertexIndex>(g_.ids_.size());
    g_.ids_.push_back(id);
    g_.index_.emplace(id, v);
    g_.vertex_attrs_.emplace_back();
    return v;
}

VertexIndex PropertyDigraph::Builder::add_vertex(const std::string& id, AttributeMap attrs) {
    const VertexIndex v = add_vertex(id);
    g_.vertex_attrs_[v] = std::move(attrs);
    return v;
}

void PropertyDigraph::Builder::set_vertex_attributes(VertexIndex v, AttributeMap attrs) {
    g_.vertex_attrs_[v] = std::move(attrs);
}

bool PropertyDigraph::Builder::add_edge(VertexIndex src, VertexIndex dst, AttributeMap attrs) {
    if (src == dst) {
        throw GraphError("self-loop on vertex '" + g_.ids_[src] + "'");
    }
    if (src >= g_.ids_.size() || dst >= g_.ids_.size()) {
        throw GraphError("edge endpoint out of range");
    }
    const auto key = edge_key(src, dst);
    if (edge_set_.contains(key)) return false;
    edge_set_.emplace(key, g_.edges_.size());
    g_.edges_.push_back({src, dst});
    if (!attrs.empty()) g_.edge_attrs_.emplace(key, std::move(attrs));
    return true;
}

bool PropertyDigraph::Builder::add_edge(const std::string& src, const std::string& dst,
                                        AttributeMap attrs) {
    const VertexIndex s = add_vertex(src);
    const VertexIndex d = add_vertex(dst);
    return add_edge(s, d, std::move(attrs));
}

PropertyDigraph PropertyDigraph::Builder::build() {
    const auto n = g_.ids_.size();
    g_.out_adj_.assign(n, {});
    g_.in_adj_.assign(n, {});
    for (const auto& e : g_.edges_) {
        g_.out_adj_[e.src].push_back(e.dst);
        g_.in_adj_[e.dst].push_back(e.src);
    }
    for (auto& row : g_.out_adj_) std::sort(row.begin(), row.end());
    for (auto& row : g_.in_adj_) std::sort(row.begin(), row.end());
    return std::move(g_);
}

} // namespace motifkit
