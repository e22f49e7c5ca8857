#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "motifkit/attribute.hpp"

namespace motifkit {

inline constexpr std::size_t min_motif_vertices = 2;
inline constexpr std::size_t max_motif_vertices = 8;

enum class EdgeKind { directed, undirected, forbidden };

struct EdgeConstraint {
    std::string src;
    std::string dst;
    EdgeKind kind;
    bool operator==(const EdgeConstraint&) const = default;
};

enum class PredicateOp { eq, ne, lt, le, gt, ge };

const char* predicate_op_text(PredicateOp op);
bool predicate_op_is_ordering(PredicateOp op);

struct AttributePredicate {
    std::string vertex;
    std::string key;
    PredicateOp op;
    AttributeValue value;
    bool operator==(const AttributePredicate&) const = default;
};

// A parsed motif specification. Immutable by convention once validated;
// vertices are listed in first-appearance order over the edge statements.
struct MotifQuery {
    std::vector<std::string> vertices;
    std::vector<EdgeConstraint> edges;
    std::vector<AttributePredicate> predicates;
    bool induced = false;

    std::size_t size() const noexcept { return vertices.size(); }

    std::optional<std::size_t> vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return i;
        return std::nullopt;
    }

    bool fully_directed() const noexcept {
        for (const auto& e : edges)
            if (e.kind == EdgeKind::undirected) return false;
        return true;
    }

    bool operator==(const MotifQuery&) const = default;
};

struct ParseError : std::runtime_error {
    enum class Kind {
        syntax,
        self_edge,
        contradictory_edges,
        disconnected_motif,
        unknown_vertex_in_predicate,
        motif_too_large,
        motif_too_small,
    };

    ParseError(Kind k, std::size_t line_no, std::size_t column_no, std::string message)
        : std::runtime_error(std::move(message)), kind(k), line(line_no), column(column_no) {}

    Kind kind;
    std::size_t line;
    std::size_t column;
};

// Parses the motif text grammar:
//   A -> B        required directed edge
//   A - B         undirected: host edge in at least one direction
//   A !> B        forbidden: no host edge A->B
//   A.key OP v    vertex attribute predicate, OP in {=, !=, <, <=, >, >=}
//   # comment
// Statements are separated by newlines or ';'. Values are double-quoted
// strings, integers, floats, or true/false. Ordering operators require a
// numeric value. The constraint graph (directed + undirected edges) must
// be weakly connected, with 2..8 template vertices.
MotifQuery parse_motif(std::string_view source);

// Bit-exact inverse of parse_motif: one statement per line, edges then
// predicates, in declaration order.
std::string pretty_print(const MotifQuery& q);

} // namespace motifkit
