#ifndef RECOLOR_COLORING_HPP
#define RECOLOR_COLORING_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Color lists are bitmasks over colors 1..64: color c is bit c-1.
using ColorMask = std::uint64_t;

inline constexpr int max_colors = 64;

inline ColorMask mask_of(int color) { return ColorMask{1} << (color - 1); }

inline ColorMask mask_full(int universe) {
    return universe >= max_colors ? ~ColorMask{0} : (ColorMask{1} << universe) - 1;
}

inline bool mask_has(ColorMask m, int color) { return (m & mask_of(color)) != 0; }

inline int mask_count(ColorMask m) { return std::popcount(m); }

// Lowest color present, 0 if the mask is empty.
inline int mask_lowest(ColorMask m) {
    return m == 0 ? 0 : std::countr_zero(m) + 1;
}

// k-th lowest color present, 0-based k; 0 if out of range.
inline int mask_nth_lowest(ColorMask m, int k) {
    while (k > 0 && m != 0) {
        m &= m - 1;
        --k;
    }
    return mask_lowest(m);
}

// Keeps only the k lowest colors of m.
inline ColorMask mask_keep_lowest(ColorMask m, int k) {
    ColorMask kept = 0;
    while (k > 0 && m != 0) {
        kept |= m & ~(m - 1);  // lowest set bit
        m &= m - 1;
        --k;
    }
    return kept;
}

inline std::vector<int> mask_to_colors(ColorMask m) {
    std::vector<int> out;
    while (m != 0) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

// Total assignment of colors 1..universe to vertices 1..n.  Not necessarily
// proper; properness is a separate predicate.
struct Coloring {
    int universe = 0;
    std::vector<int> color;  // [1..n], [0] unused

    int size() const { return static_cast<int>(color.size()) - 1; }

    int& operator[](int v) { return color[v]; }
    int operator[](int v) const { return color[v]; }

    bool operator==(const Coloring&) const = default;
};

inline Coloring make_coloring(int n, int universe, int fill = 0) {
    Coloring c;
    c.universe = universe;
    c.color.assign(static_cast<std::size_t>(n) + 1, fill);
    return c;
}

inline void check_dimensions(const Graph& g, const Coloring& c, const char* what) {
    if (c.size() != g.n)
        throw Error(ErrorCode::dimension_mismatch,
                    std::string(what) + " covers " + std::to_string(c.size()) +
                        " vertices, graph has " + std::to_string(g.n));
}

// Vertices whose color lies outside 1..universe, ascending.
inline std::vector<int> range_violations(const Coloring& c) {
    std::vector<int> out;
    for (int v = 1; v <= c.size(); ++v)
        if (c[v] < 1 || c[v] > c.universe) out.push_back(v);
    return out;
}

// Edges whose endpoints share a color, in edge-list order.
inline std::vector<std::pair<int, int>> monochromatic_edges(const Graph& g, const Coloring& c) {
    check_dimensions(g, c, "coloring");
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges)
        if (c[u] == c[v]) out.emplace_back(u, v);
    return out;
}

inline bool is_proper(const Graph& g, const Coloring& c) {
    return range_violations(c).empty() && monochromatic_edges(g, c).empty();
}

// Per-vertex color lists drawn from 1..universe.  Lists produced by solvers
// are nonempty; an unsatisfiability certificate may carry an empty list.
struct ListAssignment {
    int universe = 0;
    std::vector<ColorMask> lists;  // [1..n], [0] unused

    int size() const { return static_cast<int>(lists.size()) - 1; }

    ColorMask& operator[](int v) { return lists[v]; }
    ColorMask operator[](int v) const { return lists[v]; }
};

inline ListAssignment make_lists(int n, int universe, ColorMask fill = 0) {
    ListAssignment l;
    l.universe = universe;
    l.lists.assign(static_cast<std::size_t>(n) + 1, fill);
    return l;
}

inline void check_lists(const Graph& g, const ListAssignment& l) {
    if (l.size() != g.n)
        throw Error(ErrorCode::dimension_mismatch,
                    "lists cover " + std::to_string(l.size()) + " vertices, graph has " +
                        std::to_string(g.n));
    if (l.universe < 1 || l.universe > max_colors)
        throw Error(ErrorCode::precondition_violation,
                    "color universe " + std::to_string(l.universe) + " outside 1.." +
                        std::to_string(max_colors));
    for (int v = 1; v <= g.n; ++v)
        if ((l[v] & ~mask_full(l.universe)) != 0)
            throw Error(ErrorCode::index_out_of_range,
                        "list of vertex " + std::to_string(v) + " leaves universe 1.." +
                            std::to_string(l.universe));
}

}  // namespace recolor

#endif
