#ifndef RECOLOR_GENERATE_HPP
#define RECOLOR_GENERATE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/degeneracy.hpp"
#include "recolor/embedding.hpp"
#include "recolor/graph.hpp"

namespace recolor {

struct EmbeddedGraph {
    Graph graph;
    PlaneEmbedding embedding;
};

namespace detail {

inline void insert_after(std::vector<int>& rot, int after, int value) {
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, value);
}

}  // namespace detail

// Random planar triangulation grown from K3 by repeatedly placing a new
// vertex inside a face chosen uniformly at random and joining it to the three
// corners.  Same seed, same graph.
inline EmbeddedGraph stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 3)
        throw Error(ErrorCode::precondition_violation,
                    "stacked triangulation needs n >= 3, got " + std::to_string(n));
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges = {{1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(n) + 1);
    rot[1] = {2, 3};
    rot[2] = {1, 3};
    rot[3] = {1, 2};
    std::vector<std::array<int, 3>> faces = {{1, 2, 3}};  // corner order follows the darts
    for (int w = 4; w <= n; ++w) {
        std::size_t idx = rng() % faces.size();
        auto [a, b, c] = faces[idx];
        detail::insert_after(rot[b], a, w);
        detail::insert_after(rot[c], b, w);
        detail::insert_after(rot[a], c, w);
        rot[w] = {a, c, b};
        edges.emplace_back(a, w);
        edges.emplace_back(b, w);
        edges.emplace_back(c, w);
        faces[idx] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    EmbeddedGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.embedding.rotation = std::move(rot);
    out.embedding.outer = {2, 1};
    return out;
}

inline Graph cycle_graph(int n) {
    if (n < 3)
        throw Error(ErrorCode::precondition_violation,
                    "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return Graph::from_edges(n, std::move(edges));
}

// Replaces every edge by a path of length two; the e-th edge of the input (in
// sorted edge order) gets the new midpoint n+e.  Doubles the girth.
inline Graph subdivide_all_edges(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int w = g.n + 1 + static_cast<int>(e);
        edges.emplace_back(g.edges[e].first, w);
        edges.emplace_back(g.edges[e].second, w);
    }
    return Graph::from_edges(g.n + static_cast<int>(g.edges.size()), std::move(edges));
}

// Proper coloring sampled greedily along a degeneracy order, choosing
// uniformly among the colors not used by earlier neighbors.
inline Coloring random_proper_coloring(const Graph& g, int universe, std::uint64_t seed) {
    if (universe < 1 || universe > max_colors)
        throw Error(ErrorCode::precondition_violation,
                    "color universe " + std::to_string(universe) + " outside 1.." +
                        std::to_string(max_colors));
    std::mt19937_64 rng(seed);
    auto ord = degeneracy_ordering(g);
    Coloring c = make_coloring(g.n, universe);
    for (int i = 1; i <= g.n; ++i) {
        int v = ord.order[i];
        ColorMask used = 0;
        for (int w : g.adj[v])
            if (ord.position[w] < i) used |= mask_of(c[w]);
        ColorMask avail = mask_full(universe) & ~used;
        int cnt = mask_count(avail);
        if (cnt == 0)
            throw Error(ErrorCode::precondition_violation,
                        "no admissible color for vertex " + std::to_string(v) + " with " +
                            std::to_string(universe) + " colors");
        c[v] = mask_nth_lowest(avail, static_cast<int>(rng() % cnt));
    }
    return c;
}

}  // namespace recolor

#endif
