#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "motifkit/engine.hpp"
#include "motifkit/motif.hpp"
#include "motifkit/xswap.hpp"

namespace motifkit {

struct SignificanceCriteria {
    double z_min = 2.0;
    double p_max = 0.05;
    std::size_t min_count = 5;
};

// Observed-vs-null summary for one motif. z may be +/-infinity when the
// null distribution is degenerate (std 0) and the observed count differs
// from its mean; z is 0 when they are equal.
struct MotifStatistics {
    MotifQuery query;
    std::string canonical_label;
    std::size_t observed = 0;
    std::vector<std::size_t> null_counts;
    double null_mean = 0.0;
    double null_std = 0.0;  // sample standard deviation, n-1 denominator
    double z = 0.0;
    double p_empirical = 1.0;  // (1 + #{null >= observed}) / (n + 1)
    bool significant = false;
    // False when any count hit the engine timeout; statistics fields are
    // then unset and the motif must be reported as unscored, not dropped.
    bool scored = false;

    bool z_is_finite() const noexcept;
};

// Counts q in g and in every ensemble sample, then fills the statistics.
// significant <=> z >= z_min and p_empirical <= p_max and observed >=
// min_count. engine.timeout, when set, is the total budget for all counts
// of this call; exceeding it yields scored = false.
MotifStatistics score_motif(const MotifQuery& q,
                            const PropertyDigraph& g,
                            const NullEnsemble& ensemble,
                            const SignificanceCriteria& criteria,
                            const EngineOptions& engine = {});

// Bonferroni-adjusted p threshold for a round testing `candidates` motifs,
// clamped to the smallest p an n-sample ensemble can produce so that the
// correction cannot become unsatisfiable by construction.
double adjusted_p_max(double p_max, std::size_t candidates, std::size_t n_samples);

struct UndirectedEdgesPresent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TopologyClass { feed_forward, recurrent };

const char* topology_class_text(TopologyClass c);

// recurrent <=> the directed constraint graph contains a directed cycle.
// Forbidden constraints assert absence and do not participate. Undirected
// constraints make the classification undefined: UndirectedEdgesPresent.
TopologyClass topology_class(const MotifQuery& q);

} // namespace motifkit
