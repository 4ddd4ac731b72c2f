#ifndef RECOLOR_STATESPACE_HPP
#define RECOLOR_STATESPACE_HPP

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// The space of all proper colorings of a graph under single-vertex
// recolorings.  Explored exactly when universe^n fits the budget, by hashed
// search over the reachable part otherwise.
struct ReconfigSpace {
    Graph graph;
    int universe = 0;
    long long budget = 1'000'000;
};

namespace detail {

// universe^n when it fits below the cap, empty otherwise.
inline std::optional<long long> total_states(int universe, int n, long long cap) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / universe) return std::nullopt;
        total *= universe;
    }
    return total;
}

// Dense mixed-radix code: vertex v contributes (color-1) * universe^(v-1).
inline long long encode_state(const Coloring& c) {
    long long id = 0, w = 1;
    for (int v = 1; v <= c.size(); ++v) {
        id += static_cast<long long>(c[v] - 1) * w;
        w *= c.universe;
    }
    return id;
}

inline Coloring decode_state(long long id, int n, int universe) {
    Coloring c = make_coloring(n, universe);
    for (int v = 1; v <= n; ++v) {
        c[v] = static_cast<int>(id % universe) + 1;
        id /= universe;
    }
    return c;
}

inline std::string pack_state(const Coloring& c) {
    std::string s(static_cast<std::size_t>(c.size()), '\0');
    for (int v = 1; v <= c.size(); ++v) s[v - 1] = static_cast<char>(c[v]);
    return s;
}

inline void check_space_coloring(const ReconfigSpace& space, const Coloring& c,
                                 const char* what) {
    check_dimensions(space.graph, c, what);
    if (c.universe != space.universe)
        throw Error(ErrorCode::dimension_mismatch,
                    std::string(what) + " uses a different color universe");
    if (!range_violations(c).empty() || !monochromatic_edges(space.graph, c).empty())
        throw Error(ErrorCode::improper_input,
                    std::string(what) + " is not a proper coloring");
}

}  // namespace detail

// Exact shortest path length between two proper colorings, empty when they
// lie in different components.  Throws BUDGET_EXCEEDED only when the search
// would have to hold more states than the budget allows.
inline std::optional<long long> bfs_distance(const ReconfigSpace& space, const Coloring& a,
                                             const Coloring& b) {
    if (space.universe < 1 || space.universe > max_colors)
        throw Error(ErrorCode::precondition_violation,
                    "color universe " + std::to_string(space.universe) + " outside 1.." +
                        std::to_string(max_colors));
    detail::check_space_coloring(space, a, "start coloring");
    detail::check_space_coloring(space, b, "target coloring");
    const Graph& g = space.graph;
    int n = g.n, ell = space.universe;
    if (a.color == b.color) return 0;

    auto dense_total = detail::total_states(ell, n, space.budget);
    if (dense_total.has_value()) {
        std::vector<long long> weight(static_cast<std::size_t>(n) + 1, 1);
        for (int v = 2; v <= n; ++v) weight[v] = weight[v - 1] * ell;
        std::vector<int> dist(static_cast<std::size_t>(*dense_total), -1);
        long long src = detail::encode_state(a), dst = detail::encode_state(b);
        std::deque<long long> queue = {src};
        dist[src] = 0;
        while (!queue.empty()) {
            long long id = queue.front();
            queue.pop_front();
            Coloring cur = detail::decode_state(id, n, ell);
            for (int v = 1; v <= n; ++v) {
                ColorMask blocked = mask_of(cur[v]);
                for (int w : g.adj[v]) blocked |= mask_of(cur[w]);
                ColorMask open = mask_full(ell) & ~blocked;
                while (open != 0) {
                    int c = mask_lowest(open);
                    open &= open - 1;
                    long long next = id + static_cast<long long>(c - cur[v]) * weight[v];
                    if (dist[next] >= 0) continue;
                    dist[next] = dist[id] + 1;
                    if (next == dst) return dist[next];
                    queue.push_back(next);
                }
            }
        }
        return std::nullopt;
    }

    std::unordered_map<std::string, long long> dist;
    std::deque<std::string> queue;
    std::string src = detail::pack_state(a), dst = detail::pack_state(b);
    dist.emplace(src, 0);
    queue.push_back(src);
    while (!queue.empty()) {
        std::string cur = std::move(queue.front());
        queue.pop_front();
        long long d = dist.at(cur);
        for (int v = 1; v <= n; ++v) {
            ColorMask blocked = mask_of(cur[v - 1]);
            for (int w : g.adj[v]) blocked |= mask_of(cur[w - 1]);
            ColorMask open = mask_full(ell) & ~blocked;
            while (open != 0) {
                int c = mask_lowest(open);
                open &= open - 1;
                std::string next = cur;
                next[v - 1] = static_cast<char>(c);
                if (dist.count(next) != 0) continue;
                if (next == dst) return d + 1;
                if (static_cast<long long>(dist.size()) >= space.budget)
                    throw Error(ErrorCode::budget_exceeded,
                                "reachable set exceeds the budget of " +
                                    std::to_string(space.budget) + " states");
                dist.emplace(next, d + 1);
                queue.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

struct DiameterReport {
    long long state_count = 0;      // universe^n
    long long proper_count = 0;     // vertices of the reconfiguration graph
    long long component_count = 0;
    long long largest_component = 0;
    long long diameter = 0;         // of a largest component
    std::vector<Coloring> frozen;   // proper colorings with no move at all
};

// Full survey of the reconfiguration graph.  Eccentricities are computed once
// per orbit of the color-relabeling symmetry, which maps components onto
// components of the same size and diameter.
inline DiameterReport diameter_report(const ReconfigSpace& space) {
    if (space.universe < 1 || space.universe > max_colors)
        throw Error(ErrorCode::precondition_violation,
                    "color universe " + std::to_string(space.universe) + " outside 1.." +
                        std::to_string(max_colors));
    const Graph& g = space.graph;
    int n = g.n, ell = space.universe;
    auto dense_total = detail::total_states(ell, n, space.budget);
    if (!dense_total.has_value())
        throw Error(ErrorCode::budget_exceeded,
                    "state space larger than the budget of " + std::to_string(space.budget) +
                        " states");
    long long total = *dense_total;

    DiameterReport report;
    report.state_count = total;

    std::vector<long long> weight(static_cast<std::size_t>(n) + 1, 1);
    for (int v = 2; v <= n; ++v) weight[v] = weight[v - 1] * ell;

    auto moves = [&](long long id, const Coloring& cur, auto&& visit) {
        for (int v = 1; v <= n; ++v) {
            ColorMask blocked = mask_of(cur[v]);
            for (int w : g.adj[v]) blocked |= mask_of(cur[w]);
            ColorMask open = mask_full(ell) & ~blocked;
            while (open != 0) {
                int c = mask_lowest(open);
                open &= open - 1;
                visit(id + static_cast<long long>(c - cur[v]) * weight[v]);
            }
        }
    };

    std::vector<char> proper(static_cast<std::size_t>(total), 0);
    for (long long id = 0; id < total; ++id) {
        Coloring c = detail::decode_state(id, n, ell);
        proper[id] = monochromatic_edges(g, c).empty() ? 1 : 0;
        if (proper[id]) ++report.proper_count;
    }

    std::vector<long long> comp(static_cast<std::size_t>(total), -1);
    std::vector<long long> comp_size;
    for (long long id = 0; id < total; ++id) {
        if (!proper[id] || comp[id] >= 0) continue;
        long long cid = static_cast<long long>(comp_size.size());
        comp_size.push_back(0);
        std::deque<long long> queue = {id};
        comp[id] = cid;
        while (!queue.empty()) {
            long long cur_id = queue.front();
            queue.pop_front();
            ++comp_size[cid];
            Coloring cur = detail::decode_state(cur_id, n, ell);
            moves(cur_id, cur, [&](long long next) {
                if (comp[next] < 0) {
                    comp[next] = cid;
                    queue.push_back(next);
                }
            });
        }
    }
    report.component_count = static_cast<long long>(comp_size.size());
    for (long long size : comp_size) report.largest_component = std::max(report.largest_component, size);

    for (long long id = 0; id < total; ++id) {
        if (!proper[id]) continue;
        Coloring c = detail::decode_state(id, n, ell);
        bool moved = false;
        moves(id, c, [&](long long) { moved = true; });
        if (!moved) report.frozen.push_back(std::move(c));
    }

    // Canonical key: colors renamed by first appearance along v = 1..n.
    auto canonical = [&](const Coloring& c) {
        std::string key(static_cast<std::size_t>(n), '\0');
        std::vector<int> rename(static_cast<std::size_t>(ell) + 1, 0);
        int next = 0;
        for (int v = 1; v <= n; ++v) {
            if (rename[c[v]] == 0) rename[c[v]] = ++next;
            key[v - 1] = static_cast<char>(rename[c[v]]);
        }
        return key;
    };

    std::unordered_set<std::string> seen;
    std::vector<int> dist(static_cast<std::size_t>(total));
    for (long long id = 0; id < total; ++id) {
        if (!proper[id] || comp_size[comp[id]] != report.largest_component) continue;
        if (!seen.insert(canonical(detail::decode_state(id, n, ell))).second) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<long long> queue = {id};
        dist[id] = 0;
        long long ecc = 0;
        while (!queue.empty()) {
            long long cur_id = queue.front();
            queue.pop_front();
            ecc = std::max<long long>(ecc, dist[cur_id]);
            Coloring cur = detail::decode_state(cur_id, n, ell);
            moves(cur_id, cur, [&](long long next) {
                if (dist[next] < 0) {
                    dist[next] = dist[cur_id] + 1;
                    queue.push_back(next);
                }
            });
        }
        report.diameter = std::max(report.diameter, ecc);
    }
    return report;
}

}  // namespace recolor

#endif
