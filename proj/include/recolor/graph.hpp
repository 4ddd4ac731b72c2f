#ifndef RECOLOR_GRAPH_HPP
#define RECOLOR_GRAPH_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "recolor/errors.hpp"

namespace recolor {

// Simple undirected graph on vertices 1..n.  Edges are stored as (u,v) with
// u < v in sorted order; adjacency lists are sorted ascending.  Instances are
// only built through from_edges, which validates and normalizes.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;  // adj[0] unused

    static Graph from_edges(int n, std::vector<std::pair<int, int>> list) {
        if (n < 0) throw Error(ErrorCode::precondition_violation, "negative vertex count");
        Graph g;
        g.n = n;
        g.adj.assign(static_cast<std::size_t>(n) + 1, {});
        for (auto& [u, v] : list) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw Error(ErrorCode::index_out_of_range,
                            "edge endpoint outside 1.." + std::to_string(n));
            if (u == v)
                throw Error(ErrorCode::precondition_violation,
                            "loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(list.begin(), list.end());
        for (std::size_t i = 1; i < list.size(); ++i)
            if (list[i] == list[i - 1])
                throw Error(ErrorCode::duplicate_edge,
                            "duplicate edge (" + std::to_string(list[i].first) + "," +
                                std::to_string(list[i].second) + ")");
        g.edges = std::move(list);
        for (auto [u, v] : g.edges) {
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }

    void check_vertex(int v) const {
        if (v < 1 || v > n)
            throw Error(ErrorCode::unknown_vertex, "vertex " + std::to_string(v));
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 1 || u > n || v < 1 || v > n || u == v) return false;
        const auto& nb = adj[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }
};

// Induced subgraph together with the vertex relabelling in both directions.
// Local ids are 1..k in ascending order of the original ids; to_local[x] is 0
// for vertices outside the subgraph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // [1..k]
    std::vector<int> to_local;     // [1..n], 0 if absent
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts) {
    for (int v : verts) g.check_vertex(v);
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (verts[i] == verts[i - 1])
            throw Error(ErrorCode::precondition_violation,
                        "repeated vertex " + std::to_string(verts[i]));
    InducedSubgraph sub;
    int k = static_cast<int>(verts.size());
    sub.to_original.assign(static_cast<std::size_t>(k) + 1, 0);
    sub.to_local.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (int i = 0; i < k; ++i) {
        sub.to_original[i + 1] = verts[i];
        sub.to_local[verts[i]] = i + 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : verts)
        for (int w : g.adj[v])
            if (v < w && sub.to_local[w] != 0)
                edges.emplace_back(sub.to_local[v], sub.to_local[w]);
    sub.graph = Graph::from_edges(k, std::move(edges));
    return sub;
}

// Components listed in ascending order of their smallest vertex; each
// component's vertices sorted ascending.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<int> stack;
    for (int s = 1; s <= g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

}  // namespace recolor

#endif
