#include "motifkit/xswap.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "motifkit/rng.hpp"

namespace motifkit {

namespace {

std::uint64_t pair_key(VertexIndex s, VertexIndex d) noexcept {
    return (static_cast<std::uint64_t>(s) << 32) | d;
}

PropertyDigraph rebuild(const PropertyDigraph& source,
                        const std::vector<Edge>& edges,
                        const std::vector<AttributeMap>& edge_attrs) {
    PropertyDigraph::Builder b;
    for (VertexIndex v = 0; v < source.vertex_count(); ++v) {
        b.add_vertex(source.vertex_id(v), source.vertex_attributes(v));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        b.add_edge(edges[i].src, edges[i].dst, edge_attrs[i]);
    }
    return b.build();
}

} // namespace

SwapOutcome xswap(const PropertyDigraph& g, const SwapConfig& cfg) {
    if (!(cfg.swap_factor > 0.0)) {
        throw std::invalid_argument("swap_factor must be positive");
    }
    const std::size_t m = g.edge_count();
    if (m == 0) {
        throw TooFewEdges("cannot randomize a graph with no edges");
    }

    std::vector<Edge> edges = g.edges();
    std::vector<AttributeMap> edge_attrs(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (const AttributeMap* a = g.edge_attributes(edges[i].src, edges[i].dst)) {
            edge_attrs[i] = *a;
        }
    }

    SwapOutcome out;
    if (m >= 2) {
        std::unordered_set<std::uint64_t> present;
        present.reserve(m * 2);
        for (const Edge& e : edges) present.insert(pair_key(e.src, e.dst));

        SplitMix64 rng(cfg.seed);
        const auto attempts =
            static_cast<std::size_t>(std::ceil(cfg.swap_factor * static_cast<double>(m)));
        out.attempts = attempts;
        for (std::size_t t = 0; t < attempts; ++t) {
            const std::size_t i = static_cast<std::size_t>(rng.below(m));
            std::size_t j = static_cast<std::size_t>(rng.below(m - 1));
            if (j >= i) ++j;
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == d || c == b) continue;
            if (present.contains(pair_key(a, d)) || present.contains(pair_key(c, b))) continue;
            present.erase(pair_key(a, b));
            present.erase(pair_key(c, d));
            present.insert(pair_key(a, d));
            present.insert(pair_key(c, b));
            // Attribute maps stay at their edge index: (a,b)'s map lands on
            // (a,d) and (c,d)'s map lands on (c,b).
            std::swap(edges[i].dst, edges[j].dst);
            ++out.accepted;
        }
    }

    out.degenerate = out.accepted == 0;
    out.graph = out.degenerate ? g : rebuild(g, edges, edge_attrs);
    return out;
}

NullEnsemble build_ensemble(const PropertyDigraph& g,
                            const SwapConfig& cfg,
                            std::size_t n_samples,
                            unsigned workers) {
    if (n_samples == 0) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    if (g.edge_count() == 0) {
        throw TooFewEdges("cannot randomize a graph with no edges");
    }
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_samples));

    NullEnsemble ens;
    ens.config = cfg;
    ens.source_digest = g.structural_digest();
    ens.seeds.resize(n_samples);
    ens.acceptance_rates.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        ens.seeds[i] = derive_seed(cfg.seed, i);
    }

    std::vector<std::optional<PropertyDigraph>> slots(n_samples);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&] {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n_samples) return;
                SwapConfig sample_cfg = cfg;
                sample_cfg.seed = ens.seeds[i];
                SwapOutcome r = xswap(g, sample_cfg);
                ens.acceptance_rates[i] = r.acceptance_rate();
                slots[i] = std::move(r.graph);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ens.samples.reserve(n_samples);
    for (auto& slot : slots) ens.samples.push_back(std::move(*slot));
    return ens;
}

} // namespace motifkit
