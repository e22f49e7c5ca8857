#include "motifkit/engine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace motifkit {

namespace {

constexpr std::uint8_t req_out = 1;     // bound(new) -> bound(earlier) must exist
constexpr std::uint8_t req_in = 2;      // earlier -> new must exist
constexpr std::uint8_t req_either = 4;  // undirected
constexpr std::uint8_t forb_out = 8;
constexpr std::uint8_t forb_in = 16;

struct PairRule {
    std::size_t earlier;  // order position
    std::uint8_t flags;
};

struct PositionPlan {
    std::size_t template_index;
    std::vector<PairRule> rules;
    std::vector<AttributePredicate> predicates;
    // degree prefilter for the first position
    std::size_t need_out = 0, need_in = 0, need_either = 0;
};

struct CompiledQuery {
    std::vector<PositionPlan> positions;
    std::size_t size() const noexcept { return positions.size(); }
};

CompiledQuery compile(const MotifQuery& q, const std::vector<std::string>& order) {
    CompiledQuery cq;
    const std::size_t n = order.size();
    std::vector<std::size_t> order_pos(n);  // template index -> order position
    for (std::size_t p = 0; p < n; ++p) order_pos[*q.vertex_index(order[p])] = p;

    cq.positions.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        cq.positions[p].template_index = *q.vertex_index(order[p]);
    }

    auto rule_for = [&](std::size_t pos, std::size_t earlier) -> PairRule& {
        auto& rules = cq.positions[pos].rules;
        for (auto& r : rules)
            if (r.earlier == earlier) return r;
        rules.push_back({earlier, 0});
        return rules.back();
    };

    for (const auto& e : q.edges) {
        const std::size_t ps = order_pos[*q.vertex_index(e.src)];
        const std::size_t pd = order_pos[*q.vertex_index(e.dst)];
        const std::size_t late = std::max(ps, pd);
        const std::size_t early = std::min(ps, pd);
        PairRule& r = rule_for(late, early);
        const bool src_is_late = ps == late;
        switch (e.kind) {
            case EdgeKind::directed:
                r.flags |= src_is_late ? req_out : req_in;
                break;
            case EdgeKind::undirected:
                r.flags |= req_either;
                break;
            case EdgeKind::forbidden:
                r.flags |= src_is_late ? forb_out : forb_in;
                break;
        }
    }

    if (q.induced) {
        // Any host edge not demanded by a constraint must be absent. An
        // undirected constraint licenses both directions.
        for (std::size_t p = 1; p < n; ++p) {
            for (std::size_t e = 0; e < p; ++e) rule_for(p, e);
            for (auto& r : cq.positions[p].rules) {
                if (!(r.flags & (req_out | req_either))) r.flags |= forb_out;
                if (!(r.flags & (req_in | req_either))) r.flags |= forb_in;
            }
        }
    }

    for (const auto& pred : q.predicates) {
        cq.positions[order_pos[*q.vertex_index(pred.vertex)]].predicates.push_back(pred);
    }

    // Degree requirements of the first-bound template vertex.
    {
        const std::string& name = order[0];
        auto& plan = cq.positions[0];
        for (const auto& e : q.edges) {
            if (e.kind == EdgeKind::directed) {
                if (e.src == name) ++plan.need_out;
                if (e.dst == name) ++plan.need_in;
            } else if (e.kind == EdgeKind::undirected) {
                if (e.src == name || e.dst == name) ++plan.need_either;
            }
        }
    }
    return cq;
}

bool predicates_hold(const PropertyDigraph& g, VertexIndex v,
                     const std::vector<AttributePredicate>& preds) {
    for (const auto& p : preds) {
        const AttributeValue* attr = g.vertex_attribute(v, p.key);
        if (!attr) return false;
        // Ordering predicates carry numeric values (grammar invariant); a
        // non-numeric host attribute fails the predicate rather than
        // erroring mid-search.
        if (predicate_op_is_ordering(p.op) && !attr->is_numeric()) return false;
        switch (p.op) {
            case PredicateOp::eq:
                if (!(*attr == p.value)) return false;
                break;
            case PredicateOp::ne:
                if (*attr == p.value) return false;
                break;
            case PredicateOp::lt:
                if (!(attr->compare(p.value) < 0)) return false;
                break;
            case PredicateOp::le:
                if (!(attr->compare(p.value) <= 0)) return false;
                break;
            case PredicateOp::gt:
                if (!(attr->compare(p.value) > 0)) return false;
                break;
            case PredicateOp::ge:
                if (!(attr->compare(p.value) >= 0)) return false;
                break;
        }
    }
    return true;
}

bool rules_hold(const PropertyDigraph& g, const PositionPlan& plan, VertexIndex v,
                const std::vector<VertexIndex>& bound) {
    for (const auto& r : plan.rules) {
        const VertexIndex he = bound[r.earlier];
        if ((r.flags & req_out) && !g.has_edge(v, he)) return false;
        if ((r.flags & req_in) && !g.has_edge(he, v)) return false;
        if ((r.flags & req_either) && !g.has_edge(v, he) && !g.has_edge(he, v)) return false;
        if ((r.flags & forb_out) && g.has_edge(v, he)) return false;
        if ((r.flags & forb_in) && g.has_edge(he, v)) return false;
    }
    return true;
}

bool first_position_ok(const PropertyDigraph& g, const PositionPlan& plan, VertexIndex v) {
    if (g.out_degree(v) < plan.need_out) return false;
    if (g.in_degree(v) < plan.need_in) return false;
    if (g.out_degree(v) + g.in_degree(v) < plan.need_out + plan.need_in + plan.need_either)
        return false;
    return predicates_hold(g, v, plan.predicates);
}

// Candidate pool for a non-first position: the adjacency of the bound
// neighbor whose required constraint gives the smallest list.
std::vector<VertexIndex> candidates_for(const PropertyDigraph& g, const PositionPlan& plan,
                                        const std::vector<VertexIndex>& bound) {
    int best_kind = -1;  // 0 = out span, 1 = in span, 2 = union
    std::size_t best_size = SIZE_MAX;
    VertexIndex best_anchor = 0;
    for (const auto& r : plan.rules) {
        const VertexIndex he = bound[r.earlier];
        if (r.flags & req_out) {  // v -> he, so v is an in-neighbor of he
            if (g.in_degree(he) < best_size) {
                best_size = g.in_degree(he);
                best_kind = 1;
                best_anchor = he;
            }
        }
        if (r.flags & req_in) {  // he -> v
            if (g.out_degree(he) < best_size) {
                best_size = g.out_degree(he);
                best_kind = 0;
                best_anchor = he;
            }
        }
        if (r.flags & req_either) {
            const std::size_t s = g.out_degree(he) + g.in_degree(he);
            if (s < best_size) {
                best_size = s;
                best_kind = 2;
                best_anchor = he;
            }
        }
    }

    std::vector<VertexIndex> out;
    if (best_kind == 0) {
        auto span = g.out_neighbors(best_anchor);
        out.assign(span.begin(), span.end());
    } else if (best_kind == 1) {
        auto span = g.in_neighbors(best_anchor);
        out.assign(span.begin(), span.end());
    } else if (best_kind == 2) {
        auto a = g.out_neighbors(best_anchor);
        auto b = g.in_neighbors(best_anchor);
        out.reserve(a.size() + b.size());
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    }
    return out;
}

struct SearchDriver {
    const PropertyDigraph& g;
    const CompiledQuery& cq;
    std::uint64_t node_budget_check = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<bool>* expired = nullptr;

    bool check_time() {
        if (!has_deadline) return false;
        if (expired->load(std::memory_order_relaxed)) return true;
        if ((++node_budget_check & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline) {
            expired->store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    // Depth-first expansion of one task; Emit(bound) is called per
    // complete assignment and returns false to stop the whole search.
    template <typename Emit>
    bool dfs(std::vector<VertexIndex>& bound, Emit&& emit) {
        if (check_time()) return false;
        const std::size_t pos = bound.size();
        if (pos == cq.size()) return emit(bound);
        const PositionPlan& plan = cq.positions[pos];
        const auto cands = candidates_for(g, plan, bound);
        for (const VertexIndex v : cands) {
            if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
            if (!predicates_hold(g, v, plan.predicates)) continue;
            if (!rules_hold(g, plan, v, bound)) continue;
            bound.push_back(v);
            const bool keep_going = dfs(bound, emit);
            bound.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

std::vector<VertexIndex> first_candidates(const PropertyDigraph& g, const CompiledQuery& cq) {
    std::vector<VertexIndex> roots;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (first_position_ok(g, cq.positions[0], v)) roots.push_back(v);
    }
    return roots;
}

// mapping in template order from an order-position assignment
std::vector<VertexIndex> to_template_order(const CompiledQuery& cq,
                                           const std::vector<VertexIndex>& bound) {
    std::vector<VertexIndex> m(bound.size());
    for (std::size_t p = 0; p < bound.size(); ++p) m[cq.positions[p].template_index] = bound[p];
    return m;
}

void sort_mappings(const PropertyDigraph& g, std::vector<std::vector<VertexIndex>>& maps) {
    std::sort(maps.begin(), maps.end(),
              [&](const std::vector<VertexIndex>& a, const std::vector<VertexIndex>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      const std::string& ia = g.vertex_id(a[i]);
                      const std::string& ib = g.vertex_id(b[i]);
                      if (ia != ib) return ia < ib;
                  }
                  return false;
              });
}

MatchResult run_search(const MotifQuery& q, const PropertyDigraph& g, const EngineOptions& opts,
                       bool collect) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto order = plan_order(q, g);
    const CompiledQuery cq = compile(q, order);

    MatchResult result;
    std::atomic<bool> expired{false};
    const auto deadline = opts.timeout ? t0 + *opts.timeout : t0;

    auto make_driver = [&]() {
        SearchDriver d{g, cq};
        if (opts.timeout) {
            d.deadline = deadline;
            d.has_deadline = true;
        }
        d.expired = &expired;
        return d;
    };

    const auto roots = first_candidates(g, cq);

    if (collect && opts.limit) {
        // Limit mode runs the task pool sequentially so the kept prefix is
        // the same regardless of configured workers.
        SearchDriver d = make_driver();
        std::uint64_t found = 0;
        for (const VertexIndex root : roots) {
            std::vector<VertexIndex> bound{root};
            const bool keep_going = d.dfs(bound, [&](const std::vector<VertexIndex>& full) {
                result.mappings.push_back(to_template_order(cq, full));
                ++found;
                if (found >= *opts.limit) {
                    result.truncated = true;
                    result.reason = Truncation::limit;
                    return false;
                }
                return true;
            });
            if (!keep_going) break;
        }
        result.count = found;
    } else {
        unsigned workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
        workers = static_cast<unsigned>(
            std::min<std::size_t>(workers, std::max<std::size_t>(roots.size(), 1)));

        std::atomic<std::size_t> next{0};
        std::vector<std::uint64_t> counts(workers, 0);
        std::vector<std::vector<std::vector<VertexIndex>>> found(workers);

        auto worker_fn = [&](unsigned w) {
            SearchDriver d = make_driver();
            for (;;) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= roots.size()) break;
                if (expired.load(std::memory_order_relaxed)) break;
                std::vector<VertexIndex> bound{roots[i]};
                d.dfs(bound, [&](const std::vector<VertexIndex>& full) {
                    ++counts[w];
                    if (collect) found[w].push_back(to_template_order(cq, full));
                    return true;
                });
            }
        };

        if (workers == 1) {
            worker_fn(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker_fn, w);
            for (auto& t : threads) t.join();
        }

        for (unsigned w = 0; w < workers; ++w) {
            result.count += counts[w];
            if (collect) {
                result.mappings.insert(result.mappings.end(),
                                       std::make_move_iterator(found[w].begin()),
                                       std::make_move_iterator(found[w].end()));
            }
        }
        if (expired.load()) {
            result.truncated = true;
            result.reason = Truncation::timeout;
        }
    }

    if (collect) sort_mappings(g, result.mappings);
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return result;
}

} // namespace

std::vector<std::string> plan_order(const MotifQuery& q, const PropertyDigraph&) {
    const std::size_t n = q.size();
    std::vector<std::size_t> degree(n, 0);
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : q.edges) {
        if (e.kind == EdgeKind::forbidden) continue;
        const auto a = *q.vertex_index(e.src);
        const auto b = *q.vertex_index(e.dst);
        ++degree[a];
        ++degree[b];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    auto better = [&](std::size_t a, std::size_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return q.vertices[a] < q.vertices[b];
    };

    std::vector<bool> placed(n, false), eligible(n, false);
    std::vector<std::string> order;
    order.reserve(n);

    std::size_t first = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (better(i, first)) first = i;
    placed[first] = true;
    order.push_back(q.vertices[first]);
    for (auto nb : adj[first]) eligible[nb] = true;

    while (order.size() < n) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (placed[i] || !eligible[i]) continue;
            if (pick == n || better(i, pick)) pick = i;
        }
        placed[pick] = true;
        order.push_back(q.vertices[pick]);
        for (auto nb : adj[pick]) eligible[nb] = true;
    }
    return order;
}

std::vector<SearchTask> expand_task(const SearchTask& t, const MotifQuery& q,
                                    const PropertyDigraph& g,
                                    const std::vector<std::string>& order) {
    const CompiledQuery cq = compile(q, order);
    std::vector<SearchTask> children;
    const std::size_t pos = t.next_index();

    if (pos == 0) {
        for (const VertexIndex v : first_candidates(g, cq)) children.push_back({{v}});
        return children;
    }

    const PositionPlan& plan = cq.positions[pos];
    for (const VertexIndex v : candidates_for(g, plan, t.assignment)) {
        if (std::find(t.assignment.begin(), t.assignment.end(), v) != t.assignment.end())
            continue;
        if (!predicates_hold(g, v, plan.predicates)) continue;
        if (!rules_hold(g, plan, v, t.assignment)) continue;
        SearchTask child = t;
        child.assignment.push_back(v);
        children.push_back(std::move(child));
    }
    return children;
}

MatchResult count_monomorphisms(const MotifQuery& q, const PropertyDigraph& g,
                                const EngineOptions& opts) {
    EngineOptions o = opts;
    o.limit.reset();
    return run_search(q, g, o, /*collect=*/false);
}

MatchResult enumerate_monomorphisms(const MotifQuery& q, const PropertyDigraph& g,
                                    const EngineOptions& opts) {
    return run_search(q, g, opts, /*collect=*/true);
}

} // namespace motifkit
