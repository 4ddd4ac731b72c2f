#ifndef RECOLOR_DEGENERACY_HPP
#define RECOLOR_DEGENERACY_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Vertex order v_1..v_n in which every vertex has at most d neighbors with a
// smaller position.  Produced by repeatedly deleting a minimum-degree vertex
// (lowest index on ties) and reversing the deletion order.
struct DegeneracyOrdering {
    std::vector<int> order;        // [1..n] vertex at each position
    std::vector<int> position;     // [1..n] position of each vertex
    std::vector<int> back_degree;  // [1..n] neighbors at smaller positions
    int degeneracy = 0;

    int size() const { return static_cast<int>(order.size()) - 1; }
};

inline DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    int n = g.n;
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    int max_deg = 0;
    for (int v = 1; v <= n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::set<int>> bucket(static_cast<std::size_t>(max_deg) + 1);
    for (int v = 1; v <= n; ++v) bucket[deg[v]].insert(v);

    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> removal;
    removal.reserve(n);
    int ptr = 0;
    for (int step = 0; step < n; ++step) {
        while (ptr <= max_deg && bucket[ptr].empty()) ++ptr;
        int v = *bucket[ptr].begin();
        bucket[ptr].erase(bucket[ptr].begin());
        removed[v] = 1;
        removal.push_back(v);
        for (int w : g.adj[v]) {
            if (removed[w]) continue;
            bucket[deg[w]].erase(w);
            --deg[w];
            bucket[deg[w]].insert(w);
        }
        if (ptr > 0) --ptr;
    }

    DegeneracyOrdering out;
    out.order.assign(static_cast<std::size_t>(n) + 1, 0);
    out.position.assign(static_cast<std::size_t>(n) + 1, 0);
    out.back_degree.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        int v = removal[n - 1 - i];
        out.order[i + 1] = v;
        out.position[v] = i + 1;
    }
    for (int v = 1; v <= n; ++v) {
        int b = 0;
        for (int w : g.adj[v])
            if (out.position[w] < out.position[v]) ++b;
        out.back_degree[v] = b;
        out.degeneracy = std::max(out.degeneracy, b);
    }
    return out;
}

}  // namespace recolor

#endif
