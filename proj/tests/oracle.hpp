#pragma once

// Independent brute-force matcher used as the correctness oracle for the
// search engine and the canonical-form labeler. Full enumeration over all
// injective template-to-host tuples; constraints are checked only on
// complete tuples, with no ordering heuristics, no prefilters, and no
// shared code with the engine beyond the public graph API.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "motifkit/graph.hpp"
#include "motifkit/motif.hpp"

namespace oracle {

using motifkit::AttributeValue;
using motifkit::EdgeKind;
using motifkit::MotifQuery;
using motifkit::PredicateOp;
using motifkit::PropertyDigraph;
using motifkit::VertexIndex;

inline bool tuple_satisfies(const MotifQuery& q, const PropertyDigraph& g,
                            const std::vector<VertexIndex>& tuple) {
    for (const auto& e : q.edges) {
        const VertexIndex a = tuple[*q.vertex_index(e.src)];
        const VertexIndex b = tuple[*q.vertex_index(e.dst)];
        switch (e.kind) {
            case EdgeKind::directed:
                if (!g.has_edge(a, b)) return false;
                break;
            case EdgeKind::undirected:
                if (!g.has_edge(a, b) && !g.has_edge(b, a)) return false;
                break;
            case EdgeKind::forbidden:
                if (g.has_edge(a, b)) return false;
                break;
        }
    }

    if (q.induced) {
        // Any host edge between matched vertices must be licensed by a
        // directed constraint in that direction or an undirected one.
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            for (std::size_t j = 0; j < tuple.size(); ++j) {
                if (i == j) continue;
                bool licensed = false;
                for (const auto& e : q.edges) {
                    const std::size_t s = *q.vertex_index(e.src);
                    const std::size_t d = *q.vertex_index(e.dst);
                    if (e.kind == EdgeKind::directed && s == i && d == j) licensed = true;
                    if (e.kind == EdgeKind::undirected &&
                        ((s == i && d == j) || (s == j && d == i))) {
                        licensed = true;
                    }
                }
                if (!licensed && g.has_edge(tuple[i], tuple[j])) return false;
            }
        }
    }

    for (const auto& p : q.predicates) {
        const VertexIndex v = tuple[*q.vertex_index(p.vertex)];
        const AttributeValue* attr = g.vertex_attribute(v, p.key);
        if (!attr) return false;
        const bool ordering = p.op != PredicateOp::eq && p.op != PredicateOp::ne;
        if (ordering && !attr->is_numeric()) return false;
        switch (p.op) {
            case PredicateOp::eq:
                if (!(*attr == p.value)) return false;
                break;
            case PredicateOp::ne:
                if (*attr == p.value) return false;
                break;
            case PredicateOp::lt:
                if (attr->compare(p.value) >= 0) return false;
                break;
            case PredicateOp::le:
                if (attr->compare(p.value) > 0) return false;
                break;
            case PredicateOp::gt:
                if (attr->compare(p.value) <= 0) return false;
                break;
            case PredicateOp::ge:
                if (attr->compare(p.value) < 0) return false;
                break;
        }
    }
    return true;
}

inline std::vector<std::vector<VertexIndex>> brute_matches(const MotifQuery& q,
                                                           const PropertyDigraph& g) {
    const std::size_t k = q.size();
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexIndex>> found;
    if (k > n) return found;

    std::vector<VertexIndex> tuple(k);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == k) {
            if (tuple_satisfies(q, g, tuple)) found.push_back(tuple);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            tuple[pos] = static_cast<VertexIndex>(v);
            self(self, pos + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);

    std::sort(found.begin(), found.end(),
              [&g](const std::vector<VertexIndex>& a, const std::vector<VertexIndex>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      if (a[i] != b[i]) return g.vertex_id(a[i]) < g.vertex_id(b[i]);
                  }
                  return false;
              });
    return found;
}

inline std::uint64_t brute_count(const MotifQuery& q, const PropertyDigraph& g) {
    return brute_matches(q, g).size();
}

// Canonical-form oracle: two motifs are isomorphic iff some vertex
// bijection maps constraints and predicates onto each other exactly.
inline bool isomorphic(const MotifQuery& a, const MotifQuery& b) {
    if (a.size() != b.size() || a.induced != b.induced) return false;
    if (a.edges.size() != b.edges.size() || a.predicates.size() != b.predicates.size()) {
        return false;
    }
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    auto matches_under = [&](const std::vector<std::size_t>& p) {
        for (const auto& e : a.edges) {
            const std::size_t s = p[*a.vertex_index(e.src)];
            const std::size_t d = p[*a.vertex_index(e.dst)];
            bool hit = false;
            for (const auto& f : b.edges) {
                if (f.kind != e.kind) continue;
                const std::size_t fs = *b.vertex_index(f.src);
                const std::size_t fd = *b.vertex_index(f.dst);
                if (fs == s && fd == d) hit = true;
                if (e.kind == EdgeKind::undirected && fs == d && fd == s) hit = true;
            }
            if (!hit) return false;
        }
        for (const auto& pr : a.predicates) {
            const std::size_t v = p[*a.vertex_index(pr.vertex)];
            bool hit = false;
            for (const auto& qr : b.predicates) {
                if (*b.vertex_index(qr.vertex) == v && qr.key == pr.key &&
                    qr.op == pr.op && qr.value == pr.value) {
                    hit = true;
                }
            }
            if (!hit) return false;
        }
        return true;
    };

    do {
        if (matches_under(perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace oracle
