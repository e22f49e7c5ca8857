#include "motifkit/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace motifkit {

namespace {

constexpr std::uint8_t cell_directed = 1;   // i -> j required
constexpr std::uint8_t cell_forbidden = 2;  // i -> j forbidden
constexpr std::uint8_t cell_undirected = 4; // {i, j} undirected, set on both cells

using Matrix = std::vector<std::uint8_t>;  // n*n, row-major

Matrix build_matrix(const MotifQuery& q) {
    const std::size_t n = q.size();
    Matrix m(n * n, 0);
    for (const auto& e : q.edges) {
        const auto a = *q.vertex_index(e.src);
        const auto b = *q.vertex_index(e.dst);
        switch (e.kind) {
            case EdgeKind::directed: m[a * n + b] |= cell_directed; break;
            case EdgeKind::forbidden: m[a * n + b] |= cell_forbidden; break;
            case EdgeKind::undirected:
                m[a * n + b] |= cell_undirected;
                m[b * n + a] |= cell_undirected;
                break;
        }
    }
    return m;
}

std::string predicate_fingerprint(const MotifQuery& q, std::size_t v) {
    std::vector<std::string> parts;
    for (const auto& p : q.predicates) {
        if (*q.vertex_index(p.vertex) != v) continue;
        parts.push_back(p.key + "\x01" + predicate_op_text(p.op) + "\x01" +
                        AttributeValue::tag_name(p.value.tag()) + "\x01" + p.value.to_text());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& s : parts) {
        out += s;
        out += '\x02';
    }
    return out;
}

struct VertexInvariant {
    std::array<std::uint8_t, 5> degrees{};  // out/in directed, undirected, out/in forbidden
    std::string fingerprint;                // empty when predicates are excluded
    auto operator<=>(const VertexInvariant&) const = default;
};

std::vector<VertexInvariant> invariants(const MotifQuery& q, const Matrix& m,
                                        bool with_predicates) {
    const std::size_t n = q.size();
    std::vector<VertexInvariant> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i * n + j] & cell_directed) ++inv[i].degrees[0];
            if (m[j * n + i] & cell_directed) ++inv[i].degrees[1];
            if (m[i * n + j] & cell_undirected) ++inv[i].degrees[2];
            if (m[i * n + j] & cell_forbidden) ++inv[i].degrees[3];
            if (m[j * n + i] & cell_forbidden) ++inv[i].degrees[4];
        }
        if (with_predicates) inv[i].fingerprint = predicate_fingerprint(q, i);
    }
    return inv;
}

// Vertices sorted by invariant; invariant classes are maximal equal runs.
std::vector<std::size_t> invariant_order(const std::vector<VertexInvariant>& inv) {
    std::vector<std::size_t> order(inv.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return inv[a] < inv[b] || (inv[a] == inv[b] && a < b);
    });
    return order;
}

// Visits every assignment perm[pos] -> vertex that keeps each position
// within its invariant class. The first visited assignment is `order`
// itself.
template <typename Fn>
void for_each_class_respecting_perm(const std::vector<VertexInvariant>& inv,
                                    const std::vector<std::size_t>& order, Fn&& fn) {
    const std::size_t n = inv.size();
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end)
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || !(inv[order[i]] == inv[order[begin]])) {
            blocks.emplace_back(begin, i);
            begin = i;
        }
    }

    std::vector<std::size_t> perm = order;
    for (;;) {
        fn(perm);
        // odometer over per-block permutations
        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
            auto [lo, hi] = blocks[b];
            if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
            // next_permutation wrapped this block back to sorted; carry on
        }
        if (b == blocks.size()) return;
    }
}

void append_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v >> 24));
    out.push_back(static_cast<char>(v >> 16));
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v));
}

} // namespace

std::string canonical_form(const MotifQuery& q) {
    const std::size_t n = q.size();
    const Matrix m = build_matrix(q);
    const auto inv = invariants(q, m, true);

    // Header: induced flag, size, sorted invariant descriptors. Isomorphic
    // queries agree on all of it, so restricting the minimization below to
    // class-respecting permutations is lossless.
    std::string header;
    header.push_back(q.induced ? 1 : 0);
    header.push_back(static_cast<char>(n));
    {
        auto sorted = inv;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& d : sorted) {
            for (auto x : d.degrees) header.push_back(static_cast<char>(x));
            append_u32(header, static_cast<std::uint32_t>(d.fingerprint.size()));
            header += d.fingerprint;
        }
    }

    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> cur(n * (n - 1));
    const auto order = invariant_order(inv);
    for_each_class_respecting_perm(inv, order, [&](const std::vector<std::size_t>& perm) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                cur[k++] = m[perm[i] * n + perm[j]];
            }
        }
        if (best.empty() || cur < best) best = cur;
    });

    std::string label = header;
    label.append(reinterpret_cast<const char*>(best.data()), best.size());
    return label;
}

std::size_t automorphism_count(const MotifQuery& q) {
    const std::size_t n = q.size();
    const Matrix m = build_matrix(q);
    const auto inv = invariants(q, m, false);

    // Assignments A with cell(A[p], A[q]) == cell(order[p], order[q]) are in
    // bijection with automorphisms via A . order^-1.
    std::size_t count = 0;
    const auto order = invariant_order(inv);
    for_each_class_respecting_perm(inv, order, [&](const std::vector<std::size_t>& perm) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (m[perm[i] * n + perm[j]] != m[order[i] * n + order[j]]) return;
            }
        }
        ++count;
    });
    return count;
}

std::string label_digest_hex(const std::string& label) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace motifkit
