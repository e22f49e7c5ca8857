#include "motifkit/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace motifkit {

namespace {

using Kind = CsvError::Kind;

struct CsvRow {
    std::size_t line;
    std::vector<std::string> fields;
};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<CsvRow> read_rows(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError(Kind::file_not_found, "cannot open '" + path + "'");
    std::vector<CsvRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back({line_no, split_fields(line)});
    }
    return rows;
}

bool parse_integer(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && p == last;
}

bool parse_real(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && p == last;
}

enum class ColumnType { integer, real, boolean, text };

// Inference order fixed by the file format: integer, then float, then
// boolean, then string. Empty fields mean "absent" and do not vote.
ColumnType infer_column(const std::vector<std::string>& values) {
    bool all_int = true, all_real = true, all_bool = true;
    bool any = false;
    for (const auto& v : values) {
        if (v.empty()) continue;
        any = true;
        std::int64_t i;
        double d;
        if (!parse_integer(v, i)) all_int = false;
        if (!parse_real(v, d)) all_real = false;
        if (v != "true" && v != "false") all_bool = false;
    }
    if (!any) return ColumnType::text;
    if (all_int) return ColumnType::integer;
    if (all_real) return ColumnType::real;
    if (all_bool) return ColumnType::boolean;
    return ColumnType::text;
}

AttributeValue typed_value(ColumnType t, const std::string& raw) {
    switch (t) {
        case ColumnType::integer: {
            std::int64_t i = 0;
            parse_integer(raw, i);
            return AttributeValue(i);
        }
        case ColumnType::real: {
            double d = 0;
            parse_real(raw, d);
            return AttributeValue(d);
        }
        case ColumnType::boolean:
            return AttributeValue(raw == "true");
        case ColumnType::text:
            break;
    }
    return AttributeValue(raw);
}

// Columns after the fixed prefix (src,dst or id) become typed attributes.
std::vector<ColumnType> infer_attr_columns(const std::vector<CsvRow>& rows,
                                           std::size_t prefix, std::size_t n_attrs) {
    std::vector<ColumnType> types;
    types.reserve(n_attrs);
    for (std::size_t c = 0; c < n_attrs; ++c) {
        std::vector<std::string> col;
        col.reserve(rows.size());
        for (const auto& r : rows) col.push_back(r.fields[prefix + c]);
        types.push_back(infer_column(col));
    }
    return types;
}

void check_width(const CsvRow& row, std::size_t expected, const std::string& path) {
    if (row.fields.size() != expected) {
        throw CsvError(Kind::malformed_row,
                       path + ":" + std::to_string(row.line) + ": expected " +
                           std::to_string(expected) + " fields, got " +
                           std::to_string(row.fields.size()),
                       row.line);
    }
}

void check_nonempty_id(const std::string& id, const CsvRow& row, const std::string& path) {
    if (id.empty()) {
        throw CsvError(Kind::malformed_row,
                       path + ":" + std::to_string(row.line) + ": empty identifier", row.line);
    }
}

} // namespace

LoadResult load_graph(const std::string& edge_file, const LoadOptions& opts) {
    auto rows = read_rows(edge_file);

    std::vector<std::string> attr_names;
    if (!rows.empty() && rows.front().fields.size() >= 2 &&
        rows.front().fields[0] == "src" && rows.front().fields[1] == "dst") {
        attr_names.assign(rows.front().fields.begin() + 2, rows.front().fields.end());
        rows.erase(rows.begin());
    }
    for (const auto& r : rows) {
        if (attr_names.empty() && r.fields.size() != 2) {
            throw CsvError(Kind::malformed_row,
                           edge_file + ":" + std::to_string(r.line) +
                               ": headerless edge lists must have exactly 2 columns",
                           r.line);
        }
        check_width(r, 2 + attr_names.size(), edge_file);
    }
    const auto attr_types = infer_attr_columns(rows, 2, attr_names.size());

    struct PendingEdge {
        std::string src, dst;
        AttributeMap attrs;
    };
    std::vector<PendingEdge> edges;
    std::map<std::pair<std::string, std::string>, std::size_t> edge_index;
    LoadResult result;

    for (const auto& r : rows) {
        const std::string& src = r.fields[0];
        const std::string& dst = r.fields[1];
        check_nonempty_id(src, r, edge_file);
        check_nonempty_id(dst, r, edge_file);
        if (src == dst) {
            throw CsvError(Kind::self_loop,
                           edge_file + ":" + std::to_string(r.line) + ": self-loop on '" +
                               src + "'",
                           r.line);
        }
        if (edge_index.contains({src, dst})) {
            ++result.duplicate_edge_rows;
            continue;
        }
        AttributeMap attrs;
        for (std::size_t c = 0; c < attr_names.size(); ++c) {
            const std::string& raw = r.fields[2 + c];
            if (raw.empty()) continue;
            attrs.emplace(attr_names[c], typed_value(attr_types[c], raw));
        }
        edge_index.emplace(std::make_pair(src, dst), edges.size());
        edges.push_back({src, dst, std::move(attrs)});
    }

    // Vertex order: first appearance in the edge file, which keeps dense
    // index assignment stable under re-load.
    std::vector<std::string> vertex_order;
    std::set<std::string> seen;
    for (const auto& e : edges) {
        if (seen.insert(e.src).second) vertex_order.push_back(e.src);
        if (seen.insert(e.dst).second) vertex_order.push_back(e.dst);
    }

    std::map<std::string, AttributeMap> vertex_attrs;
    if (opts.vertex_attr_file) {
        auto vrows = read_rows(*opts.vertex_attr_file);
        if (vrows.empty() || vrows.front().fields.empty() || vrows.front().fields[0] != "id") {
            throw CsvError(Kind::malformed_row,
                           *opts.vertex_attr_file + ": header row 'id,...' required", 1);
        }
        std::vector<std::string> names(vrows.front().fields.begin() + 1,
                                       vrows.front().fields.end());
        vrows.erase(vrows.begin());
        for (const auto& r : vrows) check_width(r, 1 + names.size(), *opts.vertex_attr_file);
        const auto types = infer_attr_columns(vrows, 1, names.size());
        for (const auto& r : vrows) {
            const std::string& id = r.fields[0];
            check_nonempty_id(id, r, *opts.vertex_attr_file);
            if (!seen.contains(id)) {
                throw CsvError(Kind::attribute_for_unknown_vertex,
                               *opts.vertex_attr_file + ":" + std::to_string(r.line) +
                                   ": attribute row for unknown vertex '" + id + "'",
                               r.line);
            }
            auto& attrs = vertex_attrs[id];
            for (std::size_t c = 0; c < names.size(); ++c) {
                const std::string& raw = r.fields[1 + c];
                if (raw.empty()) continue;
                attrs.insert_or_assign(names[c], typed_value(types[c], raw));
            }
        }
    }

    if (opts.edge_attr_file) {
        auto erows = read_rows(*opts.edge_attr_file);
        if (erows.empty() || erows.front().fields.size() < 2 ||
            erows.front().fields[0] != "src" || erows.front().fields[1] != "dst") {
            throw CsvError(Kind::malformed_row,
                           *opts.edge_attr_file + ": header row 'src,dst,...' required", 1);
        }
        std::vector<std::string> names(erows.front().fields.begin() + 2,
                                       erows.front().fields.end());
        erows.erase(erows.begin());
        for (const auto& r : erows) check_width(r, 2 + names.size(), *opts.edge_attr_file);
        const auto types = infer_attr_columns(erows, 2, names.size());
        for (const auto& r : erows) {
            const std::string& src = r.fields[0];
            const std::string& dst = r.fields[1];
            if (!seen.contains(src) || !seen.contains(dst)) {
                throw CsvError(Kind::attribute_for_unknown_vertex,
                               *opts.edge_attr_file + ":" + std::to_string(r.line) +
                                   ": attribute row for unknown vertex '" +
                                   (seen.contains(src) ? dst : src) + "'",
                               r.line);
            }
            auto it = edge_index.find({src, dst});
            if (it == edge_index.end()) {
                throw CsvError(Kind::attribute_for_unknown_edge,
                               *opts.edge_attr_file + ":" + std::to_string(r.line) +
                                   ": attribute row for unknown edge " + src + "->" + dst,
                               r.line);
            }
            auto& attrs = edges[it->second].attrs;
            for (std::size_t c = 0; c < names.size(); ++c) {
                const std::string& raw = r.fields[2 + c];
                if (raw.empty()) continue;
                attrs.insert_or_assign(names[c], typed_value(types[c], raw));
            }
        }
    }

    if (opts.min_weight) {
        std::vector<PendingEdge> kept;
        kept.reserve(edges.size());
        for (auto& e : edges) {
            auto it = e.attrs.find("weight");
            bool drop = false;
            if (it != e.attrs.end() && it->second.is_numeric()) {
                const double w = it->second.tag() == AttributeValue::Tag::integer
                                     ? static_cast<double>(it->second.as_integer())
                                     : it->second.as_real();
                drop = w < *opts.min_weight;
            }
            if (drop)
                ++result.min_weight_dropped;
            else
                kept.push_back(std::move(e));
        }
        edges = std::move(kept);
    }

    PropertyDigraph::Builder b;
    for (const auto& id : vertex_order) {
        auto it = vertex_attrs.find(id);
        if (it != vertex_attrs.end())
            b.add_vertex(id, it->second);
        else
            b.add_vertex(id);
    }
    for (auto& e : edges) b.add_edge(e.src, e.dst, std::move(e.attrs));
    result.graph = b.build();
    return result;
}

std::string to_edge_csv(const PropertyDigraph& g) {
    std::set<std::string> keys;
    for (const auto& e : g.edges()) {
        if (const auto* attrs = g.edge_attributes(e.src, e.dst)) {
            for (const auto& [k, _] : *attrs) keys.insert(k);
        }
    }
    std::vector<std::tuple<std::string, std::string, const AttributeMap*>> rows;
    rows.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        rows.emplace_back(g.vertex_id(e.src), g.vertex_id(e.dst),
                          g.edge_attributes(e.src, e.dst));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });

    std::ostringstream out;
    out << "src,dst";
    for (const auto& k : keys) out << ',' << k;
    out << '\n';
    for (const auto& [src, dst, attrs] : rows) {
        out << src << ',' << dst;
        for (const auto& k : keys) {
            out << ',';
            if (attrs) {
                auto it = attrs->find(k);
                if (it != attrs->end()) out << it->second.to_text();
            }
        }
        out << '\n';
    }
    return out.str();
}

void save_edge_csv(const PropertyDigraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CsvError(Kind::file_not_found, "cannot write '" + path + "'");
    out << to_edge_csv(g);
    if (!out) throw CsvError(Kind::file_not_found, "failed writing '" + path + "'");
}

} // namespace motifkit
