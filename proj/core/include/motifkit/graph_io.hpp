#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "motifkit/graph.hpp"

namespace motifkit {

// Ingestion errors carry the 1-based file line they were raised on.
struct CsvError : GraphError {
    enum class Kind {
        file_not_found,
        malformed_row,
        self_loop,
        attribute_for_unknown_vertex,
        attribute_for_unknown_edge,
    };

    CsvError(Kind k, std::string message, std::size_t line_no = 0)
        : GraphError(std::move(message)), kind(k), line(line_no) {}

    Kind kind;
    std::size_t line;
};

struct LoadOptions {
    std::optional<std::string> vertex_attr_file;
    std::optional<std::string> edge_attr_file;
    // Drop edges whose numeric "weight" attribute is below this bound.
    std::optional<double> min_weight;
};

struct LoadResult {
    PropertyDigraph graph;
    std::size_t duplicate_edge_rows = 0;
    std::size_t min_weight_dropped = 0;
};

// Edge-list CSV: header row "src,dst[,attr...]" is optional and detected
// by its first two fields; headerless files must have exactly two columns
// (attribute columns need a header to be named). Attribute columns are
// typed per column: integer if every non-empty value parses as an integer,
// else float, else boolean ("true"/"false"), else string. Duplicate edge
// rows collapse to the first occurrence and are counted, self-loop rows
// are errors.
LoadResult load_graph(const std::string& edge_file, const LoadOptions& opts = {});

// Deterministic export: header always present, rows sorted
// lexicographically by (src, dst), attribute columns in sorted key order.
std::string to_edge_csv(const PropertyDigraph& g);
void save_edge_csv(const PropertyDigraph& g, const std::string& path);

} // namespace motifkit
