#include <doctest.h>

#include <string>
#include <vector>

#include "motifkit/motif.hpp"

using namespace motifkit;

namespace {

ParseError::Kind error_kind(const std::string& source) {
    try {
        parse_motif(source);
    } catch (const ParseError& e) {
        return e.kind;
    }
    FAIL("expected ParseError for: " << source);
    return ParseError::Kind::syntax;
}

} // namespace

TEST_CASE("parser: directed 3-cycle") {
    MotifQuery q = parse_motif("A -> B\nB -> C\nC -> A");
    CHECK(q.vertices == std::vector<std::string>{"A", "B", "C"});
    REQUIRE(q.edges.size() == 3);
    for (const auto& e : q.edges) CHECK(e.kind == EdgeKind::directed);
    CHECK(q.predicates.empty());
    CHECK_FALSE(q.induced);
}

TEST_CASE("parser: equality predicate") {
    MotifQuery q = parse_motif("A -> B\nA.type = \"KC\"");
    CHECK(q.size() == 2);
    REQUIRE(q.predicates.size() == 1);
    CHECK(q.predicates[0].vertex == "A");
    CHECK(q.predicates[0].key == "type");
    CHECK(q.predicates[0].op == PredicateOp::eq);
    CHECK(q.predicates[0].value == AttributeValue(std::string("KC")));
}

TEST_CASE("parser: forbidden edge makes a strict feed-forward pair") {
    MotifQuery q = parse_motif("A -> B\nB !> A");
    REQUIRE(q.edges.size() == 2);
    CHECK(q.edges[0].kind == EdgeKind::directed);
    CHECK(q.edges[1].kind == EdgeKind::forbidden);
    CHECK(q.edges[1].src == "B");
    CHECK(q.edges[1].dst == "A");
}

TEST_CASE("parser: undirected, semicolons, comments, blank lines") {
    MotifQuery q = parse_motif("# mushroom body pair\nA - B; B -> C  # tail\n\n");
    REQUIRE(q.edges.size() == 2);
    CHECK(q.edges[0].kind == EdgeKind::undirected);
    CHECK(q.edges[1].kind == EdgeKind::directed);
    CHECK(q.vertices == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("parser: value literals") {
    MotifQuery q = parse_motif(
        "A -> B\n"
        "A.weight >= 2.5\n"
        "B.count < 10\n"
        "A.valid = true\n"
        "B.name != \"x\\\"y\\\\z\"");
    REQUIRE(q.predicates.size() == 4);
    CHECK(q.predicates[0].value == AttributeValue(2.5));
    CHECK(q.predicates[1].value == AttributeValue(std::int64_t{10}));
    CHECK(q.predicates[2].value == AttributeValue(true));
    CHECK(q.predicates[3].value == AttributeValue(std::string("x\"y\\z")));
}

TEST_CASE("parser: vertices follow first appearance") {
    MotifQuery q = parse_motif("B -> A\nA -> C");
    CHECK(q.vertices == std::vector<std::string>{"B", "A", "C"});
}

TEST_CASE("parser: 2-cycle is legal") {
    MotifQuery q = parse_motif("A -> B\nB -> A");
    CHECK(q.edges.size() == 2);
}

TEST_CASE("parser: error variants") {
    CHECK(error_kind("A -> A") == ParseError::Kind::self_edge);
    CHECK(error_kind("A -> B\nA !> B") == ParseError::Kind::contradictory_edges);
    CHECK(error_kind("A - B\nA -> B") == ParseError::Kind::contradictory_edges);
    CHECK(error_kind("A - B\nB - A") == ParseError::Kind::contradictory_edges);
    CHECK(error_kind("A -> B\nA -> B") == ParseError::Kind::contradictory_edges);
    CHECK(error_kind("A !> B\nA !> B") == ParseError::Kind::contradictory_edges);
    CHECK(error_kind("A -> B\nC -> D") == ParseError::Kind::disconnected_motif);
    CHECK(error_kind("A !> B") == ParseError::Kind::disconnected_motif);
    CHECK(error_kind("A -> B\nC.type = \"x\"") ==
          ParseError::Kind::unknown_vertex_in_predicate);
    CHECK(error_kind("") == ParseError::Kind::motif_too_small);
    CHECK(error_kind("# nothing but comments") == ParseError::Kind::motif_too_small);

    std::string chain;
    for (char c = 'B'; c <= 'I'; ++c) {
        chain += std::string(1, char(c - 1)) + " -> " + std::string(1, c) + "\n";
    }
    CHECK(error_kind(chain) == ParseError::Kind::motif_too_large);
}

TEST_CASE("parser: syntax errors carry line and column") {
    try {
        parse_motif("A -> B\nB => C");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::syntax);
        CHECK(e.line == 2);
        CHECK(e.column >= 3);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
    CHECK(error_kind("A -> ") == ParseError::Kind::syntax);
    CHECK(error_kind("A.") == ParseError::Kind::syntax);
    CHECK(error_kind("A -> B\nA.w < \"light\"") == ParseError::Kind::syntax);
    CHECK(error_kind("A -> B\nA.s = \"unterminated") == ParseError::Kind::syntax);
    CHECK(error_kind("1A -> B") == ParseError::Kind::syntax);
}

TEST_CASE("parser: pretty_print round-trips") {
    const char* sources[] = {
        "A -> B\nB -> C\nC -> A",
        "A - B",
        "A -> B\nB !> A",
        "A - B; B -> C",
        "A -> B\nA.type = \"KC\"\nB.weight >= 2.5\nA.valid = true",
        "B -> A\nA - C\nC.n != 4",
        "A -> B\nB -> A",
        "A -> B\nB.name = \"x\\\"y\\\\z\"",
    };
    for (const char* src : sources) {
        MotifQuery q = parse_motif(src);
        const std::string printed = pretty_print(q);
        MotifQuery back = parse_motif(printed);
        CHECK(back == q);
        CHECK(pretty_print(back) == printed);
    }
}

TEST_CASE("parser: induced flag survives the round-trip via caller") {
    MotifQuery q = parse_motif("A -> B");
    q.induced = true;
    MotifQuery back = parse_motif(pretty_print(q));
    // induced is a query-level flag with no surface syntax; the caller
    // re-applies it.
    CHECK_FALSE(back.induced);
    back.induced = true;
    CHECK(back == q);
}
