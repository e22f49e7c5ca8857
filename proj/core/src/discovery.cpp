#include "motifkit/discovery.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "motifkit/canonical.hpp"
#include "motifkit/engine.hpp"

namespace motifkit {

void validate(const DiscoveryConfig& cfg) {
    if (cfg.size_min < min_motif_vertices) {
        throw std::invalid_argument("size_min must be at least 2");
    }
    if (cfg.size_max > max_motif_vertices) {
        throw std::invalid_argument("size_max must be at most 8");
    }
    if (cfg.size_min > cfg.size_max) {
        throw std::invalid_argument("size_min must not exceed size_max");
    }
    if (cfg.target_count == 0) {
        throw std::invalid_argument("target_count must be at least 1");
    }
    if (cfg.n_samples == 0) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    if (!(cfg.swap_factor > 0.0)) {
        throw std::invalid_argument("swap_factor must be positive");
    }
    if (cfg.max_rounds == 0) {
        throw std::invalid_argument("max_rounds must be at least 1");
    }
    if (cfg.frontier_cap == 0) {
        throw std::invalid_argument("frontier_cap must be at least 1");
    }
    if (!(cfg.criteria.p_max > 0.0) || cfg.criteria.p_max > 1.0) {
        throw std::invalid_argument("p_max must lie in (0, 1]");
    }
    if (cfg.per_motif_budget <= std::chrono::milliseconds::zero()) {
        throw std::invalid_argument("per_motif_budget must be positive");
    }
}

const char* refinement_kind_text(RefinementKind k) {
    switch (k) {
        case RefinementKind::seed: return "seed";
        case RefinementKind::orient_edge: return "orient_edge";
        case RefinementKind::add_edge: return "add_edge";
        case RefinementKind::add_attribute: return "add_attribute";
    }
    return "unknown";
}

namespace {

constexpr std::size_t attribute_sample_limit = 10000;
constexpr std::size_t attribute_value_top_n = 5;
constexpr std::array<char, max_motif_vertices> vertex_letters = {
    'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H'};

// Rebuilds the query through its own text form, restoring the
// first-appearance vertex order refinement edits may have disturbed.
MotifQuery normalize(const MotifQuery& q) {
    return parse_motif(pretty_print(q));
}

MotifQuery build_undirected(const std::vector<std::pair<int, int>>& edges) {
    MotifQuery q;
    q.edges.reserve(edges.size());
    for (auto [a, b] : edges) {
        q.edges.push_back({std::string(1, vertex_letters[a]),
                           std::string(1, vertex_letters[b]),
                           EdgeKind::undirected});
    }
    for (const EdgeConstraint& e : q.edges) {
        if (!q.vertex_index(e.src)) q.vertices.push_back(e.src);
        if (!q.vertex_index(e.dst)) q.vertices.push_back(e.dst);
    }
    return q;
}

} // namespace

std::vector<CandidateMotif> seed_candidates(std::size_t size) {
    if (size < min_motif_vertices || size > max_motif_vertices) {
        throw std::invalid_argument("seed size must lie in [2, 8]");
    }

    using EdgeList = std::vector<std::pair<int, int>>;
    std::map<std::string, EdgeList> level;
    {
        EdgeList base{{0, 1}};
        level.emplace(canonical_form(build_undirected(base)), base);
    }
    // Every connected graph on k vertices is a connected graph on k-1
    // vertices (drop a non-cut vertex) plus that vertex re-attached to a
    // nonempty neighbor subset, so augmenting each representative with
    // every attachment subset and deduplicating is exhaustive.
    for (std::size_t k = 3; k <= size; ++k) {
        std::map<std::string, EdgeList> next;
        for (const auto& [label, rep] : level) {
            const unsigned subsets = 1u << (k - 1);
            for (unsigned mask = 1; mask < subsets; ++mask) {
                EdgeList child = rep;
                for (unsigned b = 0; b < k - 1; ++b) {
                    if (mask & (1u << b)) {
                        child.push_back({static_cast<int>(b), static_cast<int>(k - 1)});
                    }
                }
                MotifQuery q = build_undirected(child);
                next.emplace(canonical_form(q), std::move(child));
            }
        }
        level = std::move(next);
    }

    std::vector<CandidateMotif> out;
    out.reserve(level.size());
    for (const auto& [label, rep] : level) {
        CandidateMotif c;
        c.query = normalize(build_undirected(rep));
        c.label = label;
        c.round = 0;
        c.refinement_kind = RefinementKind::seed;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

bool pair_constrained(const MotifQuery& q, const std::string& u, const std::string& v) {
    for (const EdgeConstraint& e : q.edges) {
        if ((e.src == u && e.dst == v) || (e.src == v && e.dst == u)) return true;
    }
    return false;
}

bool has_predicate_on(const MotifQuery& q, const std::string& vertex, const std::string& key) {
    for (const AttributePredicate& p : q.predicates) {
        if (p.vertex == vertex && p.key == key) return true;
    }
    return false;
}

std::string fresh_vertex_name(const MotifQuery& q) {
    for (char letter : vertex_letters) {
        std::string name(1, letter);
        if (!q.vertex_index(name)) return name;
    }
    throw std::logic_error("no free vertex name below the size cap");
}

// Distinct host values at one template position across the sampled
// matches, most frequent first; ties by tag then text for determinism.
std::vector<AttributeValue> top_values(const PropertyDigraph& g,
                                       const std::vector<std::vector<VertexIndex>>& mappings,
                                       std::size_t position,
                                       const std::string& key) {
    struct Tally {
        std::size_t count = 0;
        AttributeValue value;
    };
    std::map<std::pair<int, std::string>, Tally> tallies;
    for (const auto& mapping : mappings) {
        const AttributeValue* v = g.vertex_attribute(mapping[position], key);
        if (!v) continue;
        if (v->tag() == AttributeValue::Tag::string &&
            v->as_string().find_first_of("\r\n") != std::string::npos) {
            continue;  // not expressible as a quoted DSL literal
        }
        auto slot_key = std::make_pair(static_cast<int>(v->tag()), v->to_text());
        auto [it, fresh] = tallies.try_emplace(std::move(slot_key));
        if (fresh) it->second.value = *v;
        ++it->second.count;
    }

    std::vector<std::pair<std::pair<int, std::string>, Tally>> ordered(tallies.begin(),
                                                                       tallies.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.second.count > b.second.count; });
    std::vector<AttributeValue> out;
    for (const auto& entry : ordered) {
        if (out.size() == attribute_value_top_n) break;
        out.push_back(entry.second.value);
    }
    return out;
}

} // namespace

std::vector<CandidateMotif> refine(const CandidateMotif& c,
                                   const DiscoveryConfig& cfg,
                                   const PropertyDigraph& g) {
    std::vector<CandidateMotif> out;
    std::unordered_set<std::string> emitted{c.label};
    auto emit = [&](MotifQuery q, RefinementKind kind) {
        CandidateMotif child;
        child.query = normalize(q);
        child.label = canonical_form(child.query);
        if (!emitted.insert(child.label).second) return;
        child.parent = c.label;
        child.round = c.round + 1;
        child.refinement_kind = kind;
        out.push_back(std::move(child));
    };

    for (std::size_t i = 0; i < c.query.edges.size(); ++i) {
        if (c.query.edges[i].kind != EdgeKind::undirected) continue;
        MotifQuery forward = c.query;
        forward.edges[i].kind = EdgeKind::directed;
        emit(forward, RefinementKind::orient_edge);
        MotifQuery backward = c.query;
        backward.edges[i].kind = EdgeKind::directed;
        std::swap(backward.edges[i].src, backward.edges[i].dst);
        emit(backward, RefinementKind::orient_edge);
    }

    for (std::size_t i = 0; i < c.query.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < c.query.vertices.size(); ++j) {
            const std::string& u = c.query.vertices[i];
            const std::string& v = c.query.vertices[j];
            if (pair_constrained(c.query, u, v)) continue;
            MotifQuery grown = c.query;
            grown.edges.push_back({u, v, EdgeKind::undirected});
            emit(grown, RefinementKind::add_edge);
        }
    }
    if (c.query.size() < cfg.size_max) {
        const std::string fresh = fresh_vertex_name(c.query);
        for (const std::string& u : c.query.vertices) {
            MotifQuery grown = c.query;
            grown.edges.push_back({u, fresh, EdgeKind::undirected});
            grown.vertices.push_back(fresh);
            emit(grown, RefinementKind::add_edge);
        }
    }

    if (!cfg.attribute_keys.empty()) {
        bool any_slot = false;
        for (const std::string& vertex : c.query.vertices) {
            for (const std::string& key : cfg.attribute_keys) {
                if (!has_predicate_on(c.query, vertex, key)) any_slot = true;
            }
        }
        if (any_slot) {
            EngineOptions opts;
            opts.workers = cfg.workers;
            opts.limit = attribute_sample_limit;
            const MatchResult matches = enumerate_monomorphisms(c.query, g, opts);
            for (std::size_t vi = 0; vi < c.query.vertices.size(); ++vi) {
                const std::string& vertex = c.query.vertices[vi];
                for (const std::string& key : cfg.attribute_keys) {
                    if (has_predicate_on(c.query, vertex, key)) continue;
                    for (const AttributeValue& value :
                         top_values(g, matches.mappings, vi, key)) {
                        MotifQuery constrained = c.query;
                        constrained.predicates.push_back(
                            {vertex, key, PredicateOp::eq, value});
                        emit(constrained, RefinementKind::add_attribute);
                    }
                }
            }
        }
    }

    return out;
}

namespace {

struct CandidateRecord {
    std::size_t scored_at = 0;  // index into DiscoveryOutcome::scored
    bool significant = false;
    bool steer_pass = false;
    bool fully_directed = false;
    bool improved = false;  // a scored child was significant with greater z
    bool isolated = false;
    double z = 0.0;
};

bool passes_steer(const MotifQuery& q, const std::optional<TopologyClass>& steer) {
    if (!steer) return true;
    if (!q.fully_directed()) return true;  // still orientable, keep it alive
    return topology_class(q) == *steer;
}

bool rank_before(const CandidateMotif& a, const CandidateMotif& b) {
    const double za = a.stats->z;
    const double zb = b.stats->z;
    if (za != zb) return za > zb;
    if (a.query.size() != b.query.size()) return a.query.size() < b.query.size();
    return a.label < b.label;
}

} // namespace

DiscoveryOutcome discover(const PropertyDigraph& g, const DiscoveryConfig& cfg) {
    validate(cfg);

    DiscoveryOutcome out;
    NullEnsemble ensemble;
    try {
        SwapConfig swap_cfg;
        swap_cfg.swap_factor = cfg.swap_factor;
        swap_cfg.seed = cfg.seed;
        ensemble = build_ensemble(g, swap_cfg, cfg.n_samples, cfg.workers);
    } catch (const std::exception& e) {
        throw EnsembleFailure(std::string("null ensemble construction failed: ") + e.what());
    }
    out.ensemble_digest = ensemble.source_digest;
    out.ensemble_seeds = ensemble.seeds;
    out.ensemble_acceptance_rates = ensemble.acceptance_rates;

    EngineOptions engine;
    engine.workers = cfg.workers;
    engine.timeout = cfg.per_motif_budget;

    std::unordered_map<std::string, CandidateRecord> records;
    std::unordered_set<std::string> seen;
    std::vector<std::string> pending_parents;
    std::size_t isolated_count = 0;
    std::size_t unscored_count = 0;

    auto isolate = [&](const std::string& label) {
        CandidateRecord& r = records[label];
        if (r.isolated) return;
        r.isolated = true;
        ++isolated_count;
        out.ranked.push_back(out.scored[r.scored_at]);
    };

    std::vector<CandidateMotif> frontier = seed_candidates(cfg.size_min);
    if (frontier.size() > cfg.frontier_cap) frontier.resize(cfg.frontier_cap);
    for (const CandidateMotif& c : frontier) seen.insert(c.label);

    while (out.rounds < cfg.max_rounds && !frontier.empty()) {
        ++out.rounds;
        SignificanceCriteria criteria = cfg.criteria;
        criteria.p_max = adjusted_p_max(cfg.criteria.p_max, frontier.size(), cfg.n_samples);

        for (CandidateMotif& cand : frontier) {
            cand.stats = score_motif(cand.query, g, ensemble, criteria, engine);
            CandidateRecord rec;
            rec.scored_at = out.scored.size();
            rec.significant = cand.stats->scored && cand.stats->significant;
            rec.fully_directed = cand.query.fully_directed();
            rec.steer_pass = passes_steer(cand.query, cfg.steer);
            rec.z = cand.stats->z;
            if (!cand.stats->scored) ++unscored_count;
            if (rec.significant && cand.parent) {
                CandidateRecord& parent = records.at(*cand.parent);
                if (rec.z > parent.z) parent.improved = true;
            }
            records.emplace(cand.label, rec);
            out.scored.push_back(cand);
        }

        // Parents refined last round now have every surviving child scored.
        for (const std::string& label : pending_parents) {
            const CandidateRecord& r = records.at(label);
            if (r.significant && r.fully_directed && r.steer_pass && !r.improved) {
                isolate(label);
            }
        }
        pending_parents.clear();
        if (isolated_count >= cfg.target_count) break;

        struct QueuedChild {
            CandidateMotif motif;
            double parent_abs_z;
        };
        std::vector<QueuedChild> next;
        for (const CandidateMotif& cand : frontier) {
            const CandidateRecord& rec = records.at(cand.label);
            if (!rec.significant || !rec.steer_pass) continue;
            std::size_t enqueued = 0;
            for (CandidateMotif& child : refine(cand, cfg, g)) {
                if (!seen.insert(child.label).second) continue;
                next.push_back({std::move(child), std::abs(rec.z)});
                ++enqueued;
            }
            if (enqueued > 0) {
                pending_parents.push_back(cand.label);
            } else if (rec.fully_directed && !rec.improved) {
                // Nothing left to try: isolated vacuously.
                isolate(cand.label);
            }
        }
        if (isolated_count >= cfg.target_count) break;

        std::stable_sort(next.begin(), next.end(), [](const QueuedChild& a, const QueuedChild& b) {
            if (a.parent_abs_z != b.parent_abs_z) return a.parent_abs_z > b.parent_abs_z;
            return a.motif.label < b.motif.label;
        });
        if (next.size() > cfg.frontier_cap) next.resize(cfg.frontier_cap);
        frontier.clear();
        frontier.reserve(next.size());
        for (QueuedChild& qc : next) frontier.push_back(std::move(qc.motif));
    }

    std::stable_sort(out.ranked.begin(), out.ranked.end(), rank_before);

    std::size_t significant_total = 0;
    for (const auto& [label, rec] : records) {
        if (rec.significant) ++significant_total;
    }
    out.diagnostics.push_back("rounds run: " + std::to_string(out.rounds));
    out.diagnostics.push_back("candidates scored: " + std::to_string(out.scored.size()));
    out.diagnostics.push_back("significant candidates: " + std::to_string(significant_total));
    out.diagnostics.push_back("isolated motifs: " + std::to_string(isolated_count));
    if (unscored_count > 0) {
        out.diagnostics.push_back("unscored (budget exhausted): " +
                                  std::to_string(unscored_count));
    }
    if (out.ranked.empty()) {
        out.no_significant = true;
        out.diagnostics.push_back(
            significant_total == 0
                ? "no candidate met the significance criteria"
                : "significant candidates existed but none reached isolation");
    }
    return out;
}

} // namespace motifkit
