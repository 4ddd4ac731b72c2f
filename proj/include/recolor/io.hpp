#ifndef RECOLOR_IO_HPP
#define RECOLOR_IO_HPP

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/embedding.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

namespace detail {

struct Token {
    std::string text;
    int column;  // 1-based
};

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(std::move(cur));
    }
    return lines;
}

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return toks;
}

// Blank lines and lines whose first token starts with '#' carry no content.
inline bool significant(const std::string& line) {
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch != '#';
    }
    return false;
}

inline long long parse_int(const Token& tok, int line_no, const char* what) {
    const std::string& s = tok.text;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size())
        throw ParseError(ErrorCode::syntax, line_no, tok.column,
                         std::string("expected ") + what + ", got '" + s + "'");
    long long value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(ErrorCode::syntax, line_no, tok.column,
                             std::string("expected ") + what + ", got '" + s + "'");
        value = value * 10 + (s[i] - '0');
        if (value > 8'000'000'000'000'000'000LL)
            throw ParseError(ErrorCode::syntax, line_no, tok.column,
                             std::string(what) + " out of range");
    }
    return s[0] == '-' ? -value : value;
}

inline long long parse_int_in(const Token& tok, int line_no, long long lo, long long hi,
                              const char* what, ErrorCode range_code) {
    long long v = parse_int(tok, line_no, what);
    if (v < lo || v > hi)
        throw ParseError(range_code, line_no, tok.column,
                         std::string(what) + " " + tok.text + " outside " + std::to_string(lo) +
                             ".." + std::to_string(hi));
    return v;
}

}  // namespace detail

struct ParsedGraph {
    Graph graph;
    std::optional<PlaneEmbedding> embedding;
};

// Graph file: a 'p <n> <m>' header, m 'e <u> <v>' lines with 1 <= u < v <= n,
// and optionally one 'r <v> <neighbors...>' line per vertex giving the
// clockwise rotation.  Rotation lines are all-or-none.  '#' starts a comment.
inline ParsedGraph parse_graph(const std::string& text) {
    auto lines = detail::split_lines(text);
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> edge_set;
    std::vector<std::vector<int>> rot;
    std::vector<int> rot_line;  // 0 = no rotation line yet

    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        const std::string& line = lines[ln - 1];
        if (!detail::significant(line)) continue;
        auto toks = detail::tokenize(line);
        const auto& head = toks[0];
        if (n < 0) {
            if (head.text != "p" || toks.size() != 3)
                throw ParseError(ErrorCode::syntax, ln, head.column, "expected 'p <n> <m>' header");
            n = static_cast<int>(detail::parse_int_in(toks[1], ln, 0, 1'000'000, "vertex count",
                                                      ErrorCode::syntax));
            m = detail::parse_int_in(toks[2], ln, 0, 10'000'000, "edge count", ErrorCode::syntax);
            rot.assign(static_cast<std::size_t>(n) + 1, {});
            rot_line.assign(static_cast<std::size_t>(n) + 1, 0);
        } else if (head.text == "e") {
            if (toks.size() != 3)
                throw ParseError(ErrorCode::syntax, ln, head.column, "expected 'e <u> <v>'");
            int u = static_cast<int>(detail::parse_int_in(toks[1], ln, 1, n, "vertex",
                                                          ErrorCode::index_out_of_range));
            int v = static_cast<int>(detail::parse_int_in(toks[2], ln, 1, n, "vertex",
                                                          ErrorCode::index_out_of_range));
            if (u >= v)
                throw ParseError(ErrorCode::syntax, ln, toks[1].column,
                                 "edge endpoints must satisfy u < v");
            if (!edge_set.insert({u, v}).second)
                throw ParseError(ErrorCode::duplicate_edge, ln, toks[1].column,
                                 "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") listed twice");
            if (static_cast<long long>(edges.size()) == m)
                throw ParseError(ErrorCode::syntax, ln, head.column,
                                 "more edge lines than the declared " + std::to_string(m));
            edges.emplace_back(u, v);
        } else if (head.text == "r") {
            if (toks.size() < 2)
                throw ParseError(ErrorCode::syntax, ln, head.column,
                                 "expected 'r <v> <neighbors...>'");
            int v = static_cast<int>(detail::parse_int_in(toks[1], ln, 1, n, "vertex",
                                                          ErrorCode::index_out_of_range));
            if (rot_line[v] != 0)
                throw ParseError(ErrorCode::syntax, ln, toks[1].column,
                                 "repeated rotation line for vertex " + std::to_string(v));
            rot_line[v] = ln;
            for (std::size_t t = 2; t < toks.size(); ++t) {
                int w = static_cast<int>(detail::parse_int_in(toks[t], ln, 1, n, "vertex",
                                                              ErrorCode::index_out_of_range));
                if (w == v)
                    throw ParseError(ErrorCode::syntax, ln, toks[t].column,
                                     "vertex listed in its own rotation");
                rot[v].push_back(w);
            }
        } else {
            throw ParseError(ErrorCode::syntax, ln, head.column,
                             "unrecognized line type '" + head.text + "'");
        }
    }

    int eof = static_cast<int>(lines.size()) + 1;
    if (n < 0) throw ParseError(ErrorCode::syntax, eof, 1, "missing 'p <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(ErrorCode::syntax, eof, 1,
                         "declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));

    ParsedGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));

    int with_rot = 0;
    for (int v = 1; v <= n; ++v) with_rot += rot_line[v] != 0 ? 1 : 0;
    if (with_rot > 0 && with_rot < n) {
        int missing = 1;
        while (rot_line[missing] != 0) ++missing;
        throw ParseError(ErrorCode::syntax, eof, 1,
                         "rotation lines must cover every vertex; vertex " +
                             std::to_string(missing) + " has none");
    }
    if (with_rot == n && n > 0) {
        for (int v = 1; v <= n; ++v) {
            auto sorted = rot[v];
            std::sort(sorted.begin(), sorted.end());
            if (sorted != out.graph.adj[v])
                throw ParseError(ErrorCode::invalid_embedding, rot_line[v], 1,
                                 "rotation of vertex " + std::to_string(v) +
                                     " does not permute its neighbors");
        }
        out.embedding = PlaneEmbedding{std::move(rot), {0, 0}};
    }
    return out;
}

inline std::string serialize_graph(const Graph& g, const PlaneEmbedding* emb = nullptr) {
    std::ostringstream os;
    os << "p " << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) os << "e " << u << " " << v << "\n";
    if (emb != nullptr) {
        for (int v = 1; v <= g.n; ++v) {
            os << "r " << v;
            for (int w : emb->rotation[v]) os << " " << w;
            os << "\n";
        }
    }
    return os.str();
}

// Coloring file: one line of n space-separated colors in 1..universe.
inline Coloring parse_coloring(const std::string& text, int n, int universe) {
    auto lines = detail::split_lines(text);
    Coloring c = make_coloring(n, universe);
    bool found = false;
    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        if (!detail::significant(lines[ln - 1])) continue;
        if (found)
            throw ParseError(ErrorCode::syntax, ln, 1, "unexpected line after the coloring");
        auto toks = detail::tokenize(lines[ln - 1]);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError(ErrorCode::syntax, ln, toks[0].column,
                             "expected " + std::to_string(n) + " colors, found " +
                                 std::to_string(toks.size()));
        for (int v = 1; v <= n; ++v)
            c[v] = static_cast<int>(detail::parse_int_in(toks[v - 1], ln, 1, universe, "color",
                                                         ErrorCode::index_out_of_range));
        found = true;
    }
    if (!found)
        throw ParseError(ErrorCode::syntax, static_cast<int>(lines.size()) + 1, 1,
                         "missing coloring line");
    return c;
}

inline std::string serialize_coloring(const Coloring& c) {
    std::ostringstream os;
    for (int v = 1; v <= c.size(); ++v) os << (v > 1 ? " " : "") << c[v];
    os << "\n";
    return os.str();
}

// List file: an optional 'l <universe>' header, then one line per vertex with
// that vertex's allowed colors.  Without the header the universe is the
// largest color mentioned.
inline ListAssignment parse_lists(const std::string& text, int n) {
    auto lines = detail::split_lines(text);
    std::vector<std::vector<int>> rows;
    int universe = 0;
    bool header_seen = false, any_row = false;
    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        if (!detail::significant(lines[ln - 1])) continue;
        auto toks = detail::tokenize(lines[ln - 1]);
        if (!any_row && !header_seen && toks[0].text == "l") {
            if (toks.size() != 2)
                throw ParseError(ErrorCode::syntax, ln, toks[0].column, "expected 'l <universe>'");
            universe = static_cast<int>(detail::parse_int_in(toks[1], ln, 1, max_colors,
                                                             "universe", ErrorCode::syntax));
            header_seen = true;
            continue;
        }
        if (static_cast<int>(rows.size()) == n)
            throw ParseError(ErrorCode::syntax, ln, toks[0].column,
                             "unexpected line after " + std::to_string(n) + " lists");
        std::vector<int> row;
        for (const auto& tok : toks) {
            int cap = header_seen ? universe : max_colors;
            row.push_back(static_cast<int>(detail::parse_int_in(tok, ln, 1, cap, "color",
                                                                ErrorCode::index_out_of_range)));
        }
        rows.push_back(std::move(row));
        any_row = true;
    }
    if (static_cast<int>(rows.size()) != n)
        throw ParseError(ErrorCode::syntax, static_cast<int>(lines.size()) + 1, 1,
                         "expected " + std::to_string(n) + " list lines, found " +
                             std::to_string(rows.size()));
    if (!header_seen)
        for (const auto& row : rows)
            for (int color : row) universe = std::max(universe, color);
    ListAssignment l = make_lists(n, universe == 0 ? 1 : universe);
    for (int v = 1; v <= n; ++v)
        for (int color : rows[v - 1]) l[v] |= mask_of(color);
    return l;
}

inline std::string serialize_lists(const ListAssignment& l) {
    std::ostringstream os;
    os << "l " << l.universe << "\n";
    for (int v = 1; v <= l.size(); ++v) {
        bool first = true;
        for (int color : mask_to_colors(l[v])) {
            os << (first ? "" : " ") << color;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

struct SequenceFile {
    int n = 0;
    int universe = 0;
    std::vector<RecolorStep> steps;
};

// Sequence file: 's <n> <universe> <steps>' header, one '<v> <old> <new>'
// line per step, and a trailing 'end <checksum>' line guarding the content.
inline SequenceFile parse_sequence(const std::string& text) {
    auto lines = detail::split_lines(text);
    SequenceFile out;
    long long declared = -1;
    bool header_seen = false, end_seen = false;
    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        if (!detail::significant(lines[ln - 1])) continue;
        auto toks = detail::tokenize(lines[ln - 1]);
        if (!header_seen) {
            if (toks[0].text != "s" || toks.size() != 4)
                throw ParseError(ErrorCode::syntax, ln, toks[0].column,
                                 "expected 's <n> <universe> <steps>' header");
            out.n = static_cast<int>(detail::parse_int_in(toks[1], ln, 0, 1'000'000,
                                                          "vertex count", ErrorCode::syntax));
            out.universe = static_cast<int>(detail::parse_int_in(toks[2], ln, 1, max_colors,
                                                                 "universe", ErrorCode::syntax));
            declared = detail::parse_int_in(toks[3], ln, 0, 100'000'000, "step count",
                                            ErrorCode::syntax);
            header_seen = true;
            continue;
        }
        if (end_seen)
            throw ParseError(ErrorCode::syntax, ln, toks[0].column,
                             "unexpected line after 'end'");
        if (toks[0].text == "end") {
            if (static_cast<long long>(out.steps.size()) != declared)
                throw ParseError(ErrorCode::syntax, ln, toks[0].column,
                                 "declared " + std::to_string(declared) + " steps, found " +
                                     std::to_string(out.steps.size()));
            if (toks.size() != 2)
                throw ParseError(ErrorCode::syntax, ln, toks[0].column, "expected 'end <checksum>'");
            auto declared_sum = static_cast<std::uint32_t>(detail::parse_int_in(
                toks[1], ln, 0, 4294967295LL, "checksum", ErrorCode::syntax));
            std::uint32_t actual = sequence_checksum(out.steps);
            if (declared_sum != actual)
                throw ParseError(ErrorCode::checksum_mismatch, ln, toks[1].column,
                                 "checksum " + std::to_string(declared_sum) +
                                     " declared, steps sum to " + std::to_string(actual));
            end_seen = true;
            continue;
        }
        if (static_cast<long long>(out.steps.size()) == declared)
            throw ParseError(ErrorCode::syntax, ln, toks[0].column,
                             "more step lines than the declared " + std::to_string(declared));
        if (toks.size() != 3)
            throw ParseError(ErrorCode::syntax, ln, toks[0].column, "expected '<v> <old> <new>'");
        RecolorStep s;
        s.vertex = static_cast<int>(detail::parse_int_in(toks[0], ln, 1, out.n, "vertex",
                                                         ErrorCode::index_out_of_range));
        s.old_color = static_cast<int>(detail::parse_int_in(toks[1], ln, 1, out.universe, "color",
                                                            ErrorCode::index_out_of_range));
        s.new_color = static_cast<int>(detail::parse_int_in(toks[2], ln, 1, out.universe, "color",
                                                            ErrorCode::index_out_of_range));
        out.steps.push_back(s);
    }
    int eof = static_cast<int>(lines.size()) + 1;
    if (!header_seen) throw ParseError(ErrorCode::syntax, eof, 1, "missing sequence header");
    if (!end_seen) throw ParseError(ErrorCode::syntax, eof, 1, "missing 'end <checksum>' line");
    return out;
}

inline std::string serialize_sequence(int n, int universe, const std::vector<RecolorStep>& steps) {
    std::ostringstream os;
    os << "s " << n << " " << universe << " " << steps.size() << "\n";
    for (const auto& s : steps) os << s.vertex << " " << s.old_color << " " << s.new_color << "\n";
    os << "end " << sequence_checksum(steps) << "\n";
    return os.str();
}

}  // namespace recolor

#endif
