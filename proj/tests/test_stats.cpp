#include <doctest.h>

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "motifkit/stats.hpp"
#include "motifkit/xswap.hpp"
#include "support.hpp"

using namespace motifkit;

namespace {

PropertyDigraph chain(std::size_t edges) {
    PropertyDigraph::Builder b;
    for (std::size_t i = 0; i < edges; ++i) {
        b.add_edge(support::vertex_name(i), support::vertex_name(i + 1));
    }
    return b.build();
}

// Hand-built ensemble whose per-sample counts of "A -> B" are the edge
// counts passed in; a chain with k edges has exactly k matches.
NullEnsemble ensemble_of(const std::vector<std::size_t>& edge_counts) {
    NullEnsemble e;
    for (std::size_t k : edge_counts) {
        e.samples.push_back(chain(k));
        e.seeds.push_back(0);
        e.acceptance_rates.push_back(1.0);
    }
    return e;
}

const MotifQuery edge_q = parse_motif("A -> B");

} // namespace

TEST_CASE("stats: worked example") {
    const MotifStatistics s =
        score_motif(edge_q, chain(10), ensemble_of({4, 6, 5, 5}), SignificanceCriteria{});
    REQUIRE(s.scored);
    CHECK(s.observed == 10);
    CHECK(s.null_counts == std::vector<std::size_t>{4, 6, 5, 5});
    CHECK(s.null_mean == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(s.null_std == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(s.z == doctest::Approx(5.0 * std::sqrt(1.5)).epsilon(1e-9));
    CHECK(s.z_is_finite());
    CHECK(s.p_empirical == doctest::Approx(0.2).epsilon(1e-12));
    // Fails the default p_max = 0.05 despite the large z.
    CHECK_FALSE(s.significant);

    SignificanceCriteria loose;
    loose.p_max = 0.25;
    CHECK(score_motif(edge_q, chain(10), ensemble_of({4, 6, 5, 5}), loose).significant);
}

TEST_CASE("stats: degenerate null distribution") {
    const MotifStatistics even =
        score_motif(edge_q, chain(5), ensemble_of({5, 5, 5, 5}), SignificanceCriteria{});
    CHECK(even.null_std == 0.0);
    CHECK(even.z == 0.0);
    CHECK(even.p_empirical == doctest::Approx(1.0));
    CHECK_FALSE(even.significant);

    SignificanceCriteria loose;
    loose.p_max = 0.25;
    const MotifStatistics above =
        score_motif(edge_q, chain(10), ensemble_of({4, 4, 4, 4}), loose);
    CHECK(above.null_std == 0.0);
    CHECK(std::isinf(above.z));
    CHECK(above.z > 0.0);
    CHECK_FALSE(above.z_is_finite());
    CHECK(above.p_empirical == doctest::Approx(0.2));
    CHECK(above.significant);  // +inf compares greater than any finite z_min

    const MotifStatistics below =
        score_motif(edge_q, chain(2), ensemble_of({5, 5, 5, 5}), SignificanceCriteria{});
    CHECK(std::isinf(below.z));
    CHECK(below.z < 0.0);
    CHECK(below.p_empirical == doctest::Approx(1.0));
    CHECK_FALSE(below.significant);
}

TEST_CASE("stats: zero observed and single-sample ensembles") {
    PropertyDigraph::Builder b;
    b.add_vertex("only");
    const MotifStatistics none =
        score_motif(edge_q, b.build(), ensemble_of({3, 3}), SignificanceCriteria{});
    CHECK(none.observed == 0);
    CHECK(none.p_empirical == doctest::Approx(1.0));
    CHECK_FALSE(none.significant);

    const MotifStatistics lone =
        score_motif(edge_q, chain(10), ensemble_of({4}), SignificanceCriteria{});
    CHECK(lone.null_std == 0.0);  // n-1 denominator is undefined at n=1
    CHECK(std::isinf(lone.z));
    CHECK(lone.p_empirical == doctest::Approx(0.5));
}

TEST_CASE("stats: significance needs all three gates") {
    SignificanceCriteria c;
    c.z_min = 2.0;
    c.p_max = 0.25;
    c.min_count = 5;
    // z and p pass, min_count fails: observed 4 < 5.
    const MotifStatistics low =
        score_motif(edge_q, chain(4), ensemble_of({1, 2, 1, 2}), c);
    CHECK(low.z > 2.0);
    CHECK(low.p_empirical <= 0.25);
    CHECK_FALSE(low.significant);
}

TEST_CASE("stats: adjusted p threshold") {
    CHECK(adjusted_p_max(0.05, 1, 100) == doctest::Approx(0.05));
    CHECK(adjusted_p_max(0.05, 5, 100) == doctest::Approx(0.01));
    // Bonferroni would demand 0.005; a 100-sample ensemble bottoms out at 1/101.
    CHECK(adjusted_p_max(0.05, 10, 100) == doctest::Approx(1.0 / 101.0));
    CHECK(adjusted_p_max(0.05, 2, 9) == doctest::Approx(0.1));
}

TEST_CASE("stats: topology classification") {
    CHECK(topology_class(parse_motif("A -> B\nB -> C\nA -> C")) == TopologyClass::feed_forward);
    CHECK(topology_class(parse_motif("A -> B\nB -> C\nC -> A")) == TopologyClass::recurrent);
    CHECK(topology_class(parse_motif("A -> B\nB -> A")) == TopologyClass::recurrent);
    CHECK(topology_class(parse_motif("A -> B\nB -> C")) == TopologyClass::feed_forward);
    CHECK(topology_class(parse_motif("A -> B\nB !> A")) == TopologyClass::feed_forward);
    CHECK(topology_class(parse_motif("A -> B\nB -> C\nC -> D\nD -> A")) ==
          TopologyClass::recurrent);
    CHECK_THROWS_AS(topology_class(parse_motif("A - B")), UndirectedEdgesPresent);
    CHECK(std::string(topology_class_text(TopologyClass::feed_forward)) == "feed_forward");
    CHECK(std::string(topology_class_text(TopologyClass::recurrent)) == "recurrent");
}

TEST_CASE("stats: a blown budget leaves the motif unscored") {
    const PropertyDigraph big = support::erdos_renyi(800, 9000, 13);
    NullEnsemble ens;
    for (std::uint64_t s = 0; s < 3; ++s) {
        ens.samples.push_back(support::erdos_renyi(800, 9000, 100 + s));
        ens.seeds.push_back(s);
        ens.acceptance_rates.push_back(1.0);
    }
    const MotifQuery ring = parse_motif("A -> B\nB -> C\nC -> D\nD -> A");
    EngineOptions opts;
    opts.timeout = std::chrono::milliseconds(1);
    const MotifStatistics s = score_motif(ring, big, ens, SignificanceCriteria{}, opts);
    CHECK_FALSE(s.scored);
    CHECK_FALSE(s.significant);
}
