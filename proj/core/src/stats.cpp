#include "motifkit/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "motifkit/canonical.hpp"

namespace motifkit {

bool MotifStatistics::z_is_finite() const noexcept {
    return std::isfinite(z);
}

namespace {

using Clock = std::chrono::steady_clock;

// Remaining per-count options under a shared deadline. Returns false when
// the budget is already spent.
bool narrow_to_deadline(const EngineOptions& base,
                        const std::optional<Clock::time_point>& deadline,
                        EngineOptions& out) {
    out = base;
    out.limit.reset();
    if (!deadline) return true;
    const auto left =
        std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now());
    if (left <= std::chrono::milliseconds::zero()) return false;
    out.timeout = left;
    return true;
}

} // namespace

MotifStatistics score_motif(const MotifQuery& q,
                            const PropertyDigraph& g,
                            const NullEnsemble& ensemble,
                            const SignificanceCriteria& criteria,
                            const EngineOptions& engine) {
    if (ensemble.samples.empty()) {
        throw std::invalid_argument("ensemble must contain at least one sample");
    }

    MotifStatistics stats;
    stats.query = q;
    stats.canonical_label = canonical_form(q);

    std::optional<Clock::time_point> deadline;
    if (engine.timeout) deadline = Clock::now() + *engine.timeout;

    EngineOptions opts;
    if (!narrow_to_deadline(engine, deadline, opts)) return stats;
    const MatchResult observed = count_monomorphisms(q, g, opts);
    if (observed.truncated) return stats;
    stats.observed = observed.count;

    stats.null_counts.reserve(ensemble.samples.size());
    for (const PropertyDigraph& sample : ensemble.samples) {
        if (!narrow_to_deadline(engine, deadline, opts)) {
            stats.null_counts.clear();
            return stats;
        }
        const MatchResult r = count_monomorphisms(q, sample, opts);
        if (r.truncated) {
            stats.null_counts.clear();
            return stats;
        }
        stats.null_counts.push_back(r.count);
    }

    const std::size_t n = stats.null_counts.size();
    double sum = 0.0;
    std::size_t at_least = 0;
    for (std::size_t c : stats.null_counts) {
        sum += static_cast<double>(c);
        if (c >= stats.observed) ++at_least;
    }
    stats.null_mean = sum / static_cast<double>(n);
    if (n >= 2) {
        double ss = 0.0;
        for (std::size_t c : stats.null_counts) {
            const double d = static_cast<double>(c) - stats.null_mean;
            ss += d * d;
        }
        stats.null_std = std::sqrt(ss / static_cast<double>(n - 1));
    }

    const double obs = static_cast<double>(stats.observed);
    if (stats.null_std > 0.0) {
        stats.z = (obs - stats.null_mean) / stats.null_std;
    } else if (obs > stats.null_mean) {
        stats.z = std::numeric_limits<double>::infinity();
    } else if (obs < stats.null_mean) {
        stats.z = -std::numeric_limits<double>::infinity();
    } else {
        stats.z = 0.0;
    }
    stats.p_empirical =
        static_cast<double>(1 + at_least) / static_cast<double>(n + 1);
    stats.significant = stats.z >= criteria.z_min &&
                        stats.p_empirical <= criteria.p_max &&
                        stats.observed >= criteria.min_count;
    stats.scored = true;
    return stats;
}

double adjusted_p_max(double p_max, std::size_t candidates, std::size_t n_samples) {
    const double divided = p_max / static_cast<double>(std::max<std::size_t>(candidates, 1));
    // An n-sample ensemble cannot produce p below 1/(n+1); clamping keeps
    // the correction satisfiable for wide rounds.
    const double floor = 1.0 / static_cast<double>(n_samples + 1);
    return std::max(divided, floor);
}

const char* topology_class_text(TopologyClass c) {
    return c == TopologyClass::feed_forward ? "feed_forward" : "recurrent";
}

TopologyClass topology_class(const MotifQuery& q) {
    if (!q.fully_directed()) {
        throw UndirectedEdgesPresent(
            "topology classification requires a fully directed motif");
    }
    const std::size_t n = q.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const EdgeConstraint& e : q.edges) {
        if (e.kind != EdgeKind::directed) continue;
        adj[*q.vertex_index(e.src)].push_back(*q.vertex_index(e.dst));
    }
    // 0 unseen, 1 on stack, 2 done.
    std::vector<int> state(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        stack.push_back({root, 0});
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                const std::size_t w = adj[v][next++];
                if (state[w] == 1) return TopologyClass::recurrent;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return TopologyClass::feed_forward;
}

} // namespace motifkit
