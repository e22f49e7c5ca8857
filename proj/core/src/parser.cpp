#include "motifkit/motif.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace motifkit {

const char* predicate_op_text(PredicateOp op) {
    switch (op) {
        case PredicateOp::eq: return "=";
        case PredicateOp::ne: return "!=";
        case PredicateOp::lt: return "<";
        case PredicateOp::le: return "<=";
        case PredicateOp::gt: return ">";
        case PredicateOp::ge: return ">=";
    }
    return "?";
}

bool predicate_op_is_ordering(PredicateOp op) {
    return op == PredicateOp::lt || op == PredicateOp::le || op == PredicateOp::gt ||
           op == PredicateOp::ge;
}

namespace {

using Kind = ParseError::Kind;

struct Scanner {
    std::string_view src;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool eof() const { return pos >= src.size(); }
    char peek() const { return src[pos]; }

    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(Kind::syntax, line, col, "expected " + expected);
    }

    // Space and tabs only; newlines are statement terminators.
    void skip_blanks() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
    }

    void skip_comment() {
        while (!eof() && peek() != '\n') advance();
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string identifier() {
        if (eof() || !ident_start(peek())) fail("identifier");
        std::string out;
        while (!eof() && ident_char(peek())) out.push_back(advance());
        return out;
    }

    AttributeValue value() {
        if (eof()) fail("value");
        const char c = peek();
        if (c == '"') return string_value();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return number_value();
        if (ident_start(c)) {
            const std::size_t l = line, co = col;
            const std::string word = identifier();
            if (word == "true") return AttributeValue(true);
            if (word == "false") return AttributeValue(false);
            throw ParseError(Kind::syntax, l, co, "expected value, got '" + word + "'");
        }
        fail("value");
    }

    AttributeValue string_value() {
        advance();  // opening quote
        std::string out;
        while (!eof()) {
            char c = peek();
            if (c == '\n') fail("closing '\"'");
            advance();
            if (c == '"') return AttributeValue(std::move(out));
            if (c == '\\') {
                if (eof()) fail("escape character");
                char e = advance();
                if (e == '"' || e == '\\')
                    out.push_back(e);
                else
                    fail("escape sequence \\\" or \\\\");
            } else {
                out.push_back(c);
            }
        }
        fail("closing '\"'");
    }

    AttributeValue number_value() {
        const std::size_t start = pos;
        if (peek() == '-') advance();
        while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                          peek() == 'e' || peek() == 'E' ||
                          ((peek() == '+' || peek() == '-') && pos > start &&
                           (src[pos - 1] == 'e' || src[pos - 1] == 'E'))))
            advance();
        const std::string_view text = src.substr(start, pos - start);
        std::int64_t i;
        {
            auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
            if (ec == std::errc{} && p == text.data() + text.size()) return AttributeValue(i);
        }
        double d;
        {
            auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
            if (ec == std::errc{} && p == text.data() + text.size()) return AttributeValue(d);
        }
        fail("number");
    }
};

// Pair-slot bookkeeping for the contradiction rules: per unordered pair,
// an undirected constraint excludes everything else; per ordered pair, at
// most one of {directed, forbidden}.
struct PairState {
    bool undirected = false;
    bool fwd_directed = false, fwd_forbidden = false;
    bool rev_directed = false, rev_forbidden = false;
    bool any() const {
        return undirected || fwd_directed || fwd_forbidden || rev_directed || rev_forbidden;
    }
};

} // namespace

MotifQuery parse_motif(std::string_view source) {
    Scanner s{source};
    MotifQuery q;
    std::set<std::string> vertex_set;
    std::map<std::pair<std::string, std::string>, PairState> pairs;  // key: sorted pair
    struct PendingPredicate {
        AttributePredicate pred;
        std::size_t line, col;
    };
    std::vector<PendingPredicate> pending;

    auto intern_vertex = [&](const std::string& name, std::size_t line, std::size_t col) {
        if (vertex_set.insert(name).second) {
            q.vertices.push_back(name);
            if (q.vertices.size() > max_motif_vertices) {
                throw ParseError(Kind::motif_too_large, line, col,
                                 "motif exceeds " + std::to_string(max_motif_vertices) +
                                     " vertices");
            }
        }
    };

    auto add_edge = [&](const std::string& a, const std::string& b, EdgeKind kind,
                        std::size_t line, std::size_t col) {
        if (a == b) {
            throw ParseError(Kind::self_edge, line, col,
                             "self-edge on template vertex '" + a + "'");
        }
        intern_vertex(a, line, col);
        intern_vertex(b, line, col);
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        PairState& st = pairs[key];
        const bool forward = a == key.first;
        bool conflict = false;
        if (kind == EdgeKind::undirected) {
            conflict = st.any();
            st.undirected = true;
        } else {
            bool& slot = kind == EdgeKind::directed ? (forward ? st.fwd_directed : st.rev_directed)
                                                    : (forward ? st.fwd_forbidden : st.rev_forbidden);
            bool& other = kind == EdgeKind::directed
                              ? (forward ? st.fwd_forbidden : st.rev_forbidden)
                              : (forward ? st.fwd_directed : st.rev_directed);
            conflict = st.undirected || slot || other;
            slot = true;
        }
        if (conflict) {
            throw ParseError(Kind::contradictory_edges, line, col,
                             "contradictory constraints on pair (" + key.first + ", " +
                                 key.second + ")");
        }
        q.edges.push_back({a, b, kind});
    };

    while (!s.eof()) {
        s.skip_blanks();
        if (s.eof()) break;
        const char c = s.peek();
        if (c == '\n' || c == ';') {
            s.advance();
            continue;
        }
        if (c == '#') {
            s.skip_comment();
            continue;
        }

        const std::size_t stmt_line = s.line, stmt_col = s.col;
        const std::string first = s.identifier();
        s.skip_blanks();
        if (s.eof()) s.fail("'->', '-', '!>', or '.'");

        const char op0 = s.peek();
        if (op0 == '.') {
            s.advance();
            const std::string key = s.identifier();
            s.skip_blanks();
            PredicateOp op;
            if (s.eof()) s.fail("comparison operator");
            const std::size_t op_line = s.line, op_col = s.col;
            char o = s.advance();
            switch (o) {
                case '=': op = PredicateOp::eq; break;
                case '!':
                    if (s.eof() || s.peek() != '=') s.fail("'=' after '!'");
                    s.advance();
                    op = PredicateOp::ne;
                    break;
                case '<':
                    op = PredicateOp::lt;
                    if (!s.eof() && s.peek() == '=') {
                        s.advance();
                        op = PredicateOp::le;
                    }
                    break;
                case '>':
                    op = PredicateOp::gt;
                    if (!s.eof() && s.peek() == '=') {
                        s.advance();
                        op = PredicateOp::ge;
                    }
                    break;
                default:
                    throw ParseError(Kind::syntax, op_line, op_col,
                                     "expected comparison operator");
            }
            s.skip_blanks();
            const std::size_t val_line = s.line, val_col = s.col;
            AttributeValue value = s.value();
            if (predicate_op_is_ordering(op) && !value.is_numeric()) {
                throw ParseError(Kind::syntax, val_line, val_col,
                                 "expected numeric value for ordering operator");
            }
            pending.push_back({{first, key, op, std::move(value)}, stmt_line, stmt_col});
        } else if (op0 == '-') {
            s.advance();
            EdgeKind kind = EdgeKind::undirected;
            if (!s.eof() && s.peek() == '>') {
                s.advance();
                kind = EdgeKind::directed;
            }
            s.skip_blanks();
            const std::string second = s.identifier();
            add_edge(first, second, kind, stmt_line, stmt_col);
        } else if (op0 == '!') {
            s.advance();
            if (s.eof() || s.peek() != '>') s.fail("'>' after '!'");
            s.advance();
            s.skip_blanks();
            const std::string second = s.identifier();
            add_edge(first, second, EdgeKind::forbidden, stmt_line, stmt_col);
        } else {
            s.fail("'->', '-', '!>', or '.'");
        }

        // Statement terminator.
        s.skip_blanks();
        if (!s.eof()) {
            const char t = s.peek();
            if (t == '\n' || t == ';') {
                s.advance();
            } else if (t == '#') {
                s.skip_comment();
            } else {
                s.fail("end of statement");
            }
        }
    }

    if (q.vertices.size() < min_motif_vertices) {
        throw ParseError(Kind::motif_too_small, s.line, s.col,
                         "motif needs at least " + std::to_string(min_motif_vertices) +
                             " template vertices");
    }

    for (auto& p : pending) {
        if (!vertex_set.contains(p.pred.vertex)) {
            throw ParseError(Kind::unknown_vertex_in_predicate, p.line, p.col,
                             "predicate on unknown template vertex '" + p.pred.vertex + "'");
        }
        q.predicates.push_back(std::move(p.pred));
    }

    // Weak connectivity over directed + undirected constraints.
    {
        const std::size_t n = q.vertices.size();
        std::vector<std::size_t> comp(n);
        for (std::size_t i = 0; i < n; ++i) comp[i] = i;
        auto root = [&](std::size_t x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (const auto& e : q.edges) {
            if (e.kind == EdgeKind::forbidden) continue;
            const auto a = root(*q.vertex_index(e.src));
            const auto b = root(*q.vertex_index(e.dst));
            if (a != b) comp[a] = b;
        }
        for (std::size_t i = 1; i < n; ++i) {
            if (root(i) != root(0)) {
                throw ParseError(Kind::disconnected_motif, s.line, s.col,
                                 "motif constraint graph is not weakly connected");
            }
        }
    }

    return q;
}

std::string pretty_print(const MotifQuery& q) {
    std::ostringstream out;
    for (const auto& e : q.edges) {
        const char* op = e.kind == EdgeKind::directed ? "->"
                         : e.kind == EdgeKind::undirected ? "-"
                                                          : "!>";
        out << e.src << ' ' << op << ' ' << e.dst << '\n';
    }
    for (const auto& p : q.predicates) {
        out << p.vertex << '.' << p.key << ' ' << predicate_op_text(p.op) << ' ';
        if (p.value.tag() == AttributeValue::Tag::string) {
            out << '"';
            for (char c : p.value.as_string()) {
                if (c == '"' || c == '\\') out << '\\';
                out << c;
            }
            out << '"';
        } else {
            out << p.value.to_text();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace motifkit
