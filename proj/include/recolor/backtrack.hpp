#ifndef RECOLOR_BACKTRACK_HPP
#define RECOLOR_BACKTRACK_HPP

#include <optional>
#include <utility>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Exact list-coloring search: most-constrained vertex first (lowest index on
// ties), colors tried in increasing order, with forward checking.  Works on
// any graph; returns the first coloring in that deterministic search order.
inline std::optional<Coloring> backtrack_list_color(const Graph& g, const ListAssignment& lists) {
    check_lists(g, lists);
    int n = g.n;
    std::vector<ColorMask> avail(lists.lists);
    std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, ColorMask>> trail;
    Coloring c = make_coloring(n, lists.universe);

    auto solve = [&](auto&& self) -> bool {
        int v = 0, v_cnt = max_colors + 1;
        for (int u = 1; u <= n; ++u) {
            if (done[u]) continue;
            int cnt = mask_count(avail[u]);
            if (cnt < v_cnt) {
                v_cnt = cnt;
                v = u;
            }
        }
        if (v == 0) return true;
        if (v_cnt == 0) return false;
        done[v] = 1;
        ColorMask options = avail[v];
        while (options != 0) {
            int color = mask_lowest(options);
            options &= options - 1;
            c[v] = color;
            std::size_t mark = trail.size();
            bool dead = false;
            for (int w : g.adj[v]) {
                if (done[w] || !mask_has(avail[w], color)) continue;
                trail.emplace_back(w, mask_of(color));
                avail[w] &= ~mask_of(color);
                if (avail[w] == 0) dead = true;
            }
            if (!dead && self(self)) return true;
            while (trail.size() > mark) {
                avail[trail.back().first] |= trail.back().second;
                trail.pop_back();
            }
        }
        done[v] = 0;
        c[v] = 0;
        return false;
    };
    if (solve(solve)) return c;
    return std::nullopt;
}

}  // namespace recolor

#endif
