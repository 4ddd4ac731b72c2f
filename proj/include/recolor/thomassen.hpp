#ifndef RECOLOR_THOMASSEN_HPP
#define RECOLOR_THOMASSEN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/embedding.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// List-coloring instance on a near-triangulation: every face except the outer
// one is a triangle.  The first two outer-cycle vertices are precolored c1 and
// c2; the remaining outer vertices carry lists of size >= 3 and interior
// vertices lists of size >= 5.
struct PrecoloredInstance {
    Graph graph;
    PlaneEmbedding embedding;
    std::vector<int> outer_cycle;  // boundary walk, starting with the precolored pair
    int c1 = 0, c2 = 0;
    ListAssignment lists;
};

struct SolveStats {
    long long basic_steps = 0;
    int max_depth = 0;
};

namespace detail {

// The classical inductive argument, run iteratively over explicit subproblem
// state.  Cycle vertices C[0], C[1] are always colored already; a chord
// splits the disk in two, otherwise C[2] is deleted: two colors of its list
// are reserved, struck from the lists of its fan of interior neighbors, and
// one of them is applied after the rest of the disk is colored.
class DiskColorer {
public:
    DiskColorer(const Graph& g, const std::vector<Face>& inner, std::vector<ColorMask> lists)
        : g_(g),
          faces_(inner),
          lists_(std::move(lists)),
          color_(static_cast<std::size_t>(g.n) + 1, 0),
          pos_(static_cast<std::size_t>(g.n) + 1, -1),
          stamp_(inner.size(), 0) {
        edge_faces_.reserve(4 * faces_.size());
        for (int fid = 0; fid < static_cast<int>(faces_.size()); ++fid) {
            const auto& w = faces_[fid].walk;
            for (std::size_t t = 0; t < w.size(); ++t)
                attach(w[t], w[(t + 1) % w.size()], fid);
        }
    }

    std::vector<int> color_;  // [1..n], filled by solve

    void solve(std::vector<int> cycle, std::vector<int> region, int depth, SolveStats& stats) {
        stats.max_depth = std::max(stats.max_depth, depth);
        stats.basic_steps += static_cast<long long>(cycle.size()) + region.size();
        std::uint64_t serial = ++serial_;
        for (int fid : region) stamp_[fid] = serial;
        int t = static_cast<int>(cycle.size());

        if (t == 3 && region.size() == 1) {
            int w = cycle[2];
            ColorMask m = lists_[w] & ~mask_of(color_[cycle[0]]) & ~mask_of(color_[cycle[1]]);
            require(m != 0, "base triangle has no color left");
            color_[w] = mask_lowest(m);
            return;
        }

        for (int i = 0; i < t; ++i) pos_[cycle[i]] = i;
        int ci = -1, cj = -1;
        for (int i = 0; i < t && ci < 0; ++i) {
            int best = -1;
            for (int w : g_.adj[cycle[i]]) {
                int j = pos_[w];
                if (j <= i + 1 || (i == 0 && j == t - 1)) continue;
                if ((best < 0 || j < best) && region_faces(cycle[i], w, serial) > 0) best = j;
            }
            if (best >= 0) {
                ci = i;
                cj = best;
            }
        }

        if (ci >= 0) {
            int x = cycle[ci], y = cycle[cj];
            std::vector<int> side_a, side_b;
            if (ci == 0) {
                side_a.assign(cycle.begin(), cycle.begin() + cj + 1);
                side_b.assign(cycle.begin() + cj, cycle.end());
                side_b.push_back(cycle[0]);
            } else {
                side_a.assign(cycle.begin() + cj, cycle.end());
                side_a.insert(side_a.end(), cycle.begin(), cycle.begin() + ci + 1);
                side_b.assign(cycle.begin() + ci, cycle.begin() + cj + 1);
            }

            // Flood the side of the pair edge without crossing the chord.
            int start = sole_region_face(cycle[0], cycle[1], serial);
            std::vector<char> in_a(faces_.size(), 0);
            std::vector<int> queue = {start};
            in_a[start] = 1;
            while (!queue.empty()) {
                int fid = queue.back();
                queue.pop_back();
                const auto& w = faces_[fid].walk;
                for (std::size_t k = 0; k < w.size(); ++k) {
                    int a = w[k], b = w[(k + 1) % w.size()];
                    if ((a == x && b == y) || (a == y && b == x)) continue;
                    int other = other_region_face(a, b, fid, serial);
                    if (other >= 0 && !in_a[other]) {
                        in_a[other] = 1;
                        queue.push_back(other);
                    }
                }
            }
            std::vector<int> region_a, region_b;
            for (int fid : region) (in_a[fid] ? region_a : region_b).push_back(fid);
            require(!region_a.empty() && !region_b.empty(), "chord fails to split the disk");

            for (int i = 0; i < t; ++i) pos_[cycle[i]] = -1;
            rotate_to(side_a, cycle[0]);
            require(side_a[1] == cycle[1], "pair edge left the pair side");
            solve(std::move(side_a), std::move(region_a), depth + 1, stats);

            int lo = std::min(x, y), hi = std::max(x, y);
            rotate_to(side_b, lo);
            if (side_b[1] != hi) {
                std::reverse(side_b.begin() + 1, side_b.end());
                require(side_b[1] == hi, "chord endpoints not adjacent on the far side");
            }
            solve(std::move(side_b), std::move(region_b), depth + 1, stats);
            return;
        }

        // No chord: delete u = C[2].
        int u = cycle[2];
        int w3 = cycle[3 % t];
        ColorMask res = lists_[u] & ~mask_of(color_[cycle[1]]);
        require(mask_count(res) >= 2, "fewer than two reserve colors");
        ColorMask rmask = mask_of(mask_lowest(res)) | mask_of(mask_nth_lowest(res, 1));

        std::vector<int> fan;
        std::vector<char> dead(faces_.size(), 0);
        int prev = cycle[1];
        int cur = sole_region_face(u, prev, serial);
        for (std::size_t guard = 0;; ++guard) {
            require(guard <= region.size(), "fan walk does not close");
            dead[cur] = 1;
            int third = -1;
            for (int w : faces_[cur].walk)
                if (w != u && w != prev) third = w;
            require(third > 0, "degenerate fan triangle");
            if (third == w3) break;
            require(pos_[third] < 0, "fan vertex lies on the cycle");
            fan.push_back(third);
            int next = other_region_face(u, third, cur, serial);
            require(next >= 0, "fan walk left the disk");
            prev = third;
            cur = next;
        }
        for (int w : fan) {
            lists_[w] &= ~rmask;
            require(mask_count(lists_[w]) >= 3, "fan list drops below three colors");
        }
        std::vector<int> next_cycle = {cycle[0], cycle[1]};
        next_cycle.insert(next_cycle.end(), fan.begin(), fan.end());
        next_cycle.insert(next_cycle.end(), cycle.begin() + 3, cycle.end());
        require(next_cycle.size() >= 3, "cycle collapsed");
        std::vector<int> next_region;
        for (int fid : region)
            if (!dead[fid]) next_region.push_back(fid);
        require(!next_region.empty(), "disk emptied before the base case");

        for (int i = 0; i < t; ++i) pos_[cycle[i]] = -1;
        solve(std::move(next_cycle), std::move(next_region), depth + 1, stats);

        ColorMask pick = rmask & ~mask_of(color_[w3]);
        require(pick != 0, "both reserves blocked");
        color_[u] = mask_lowest(pick);
    }

private:
    const Graph& g_;
    const std::vector<Face>& faces_;
    std::vector<ColorMask> lists_;
    std::vector<int> pos_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t serial_ = 0;
    std::unordered_map<std::uint64_t, std::pair<int, int>> edge_faces_;

    static std::uint64_t key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    void attach(int u, int v, int fid) {
        auto [it, fresh] = edge_faces_.try_emplace(key(u, v), std::pair<int, int>{fid, -1});
        if (!fresh) it->second.second = fid;
    }

    void require(bool ok, const char* msg) const {
        if (!ok)
            throw Error(ErrorCode::precondition_violation,
                        std::string("not a valid instance: ") + msg);
    }

    int region_faces(int u, int v, std::uint64_t serial) const {
        auto it = edge_faces_.find(key(u, v));
        if (it == edge_faces_.end()) return 0;
        int cnt = 0;
        if (it->second.first >= 0 && stamp_[it->second.first] == serial) ++cnt;
        if (it->second.second >= 0 && stamp_[it->second.second] == serial) ++cnt;
        return cnt;
    }

    int sole_region_face(int u, int v, std::uint64_t serial) const {
        auto it = edge_faces_.find(key(u, v));
        require(it != edge_faces_.end(), "missing boundary edge");
        int found = -1, cnt = 0;
        for (int fid : {it->second.first, it->second.second})
            if (fid >= 0 && stamp_[fid] == serial) {
                found = fid;
                ++cnt;
            }
        require(cnt == 1, "boundary edge not on exactly one region face");
        return found;
    }

    int other_region_face(int u, int v, int fid, std::uint64_t serial) const {
        auto it = edge_faces_.find(key(u, v));
        if (it == edge_faces_.end()) return -1;
        for (int cand : {it->second.first, it->second.second})
            if (cand >= 0 && cand != fid && stamp_[cand] == serial) return cand;
        return -1;
    }

    static void rotate_to(std::vector<int>& cycle, int front) {
        auto it = std::find(cycle.begin(), cycle.end(), front);
        std::rotate(cycle.begin(), it, cycle.end());
    }
};

inline bool cycle_matches_walk(const std::vector<int>& cycle, const std::vector<int>& walk) {
    int t = static_cast<int>(cycle.size());
    if (static_cast<int>(walk.size()) != t) return false;
    for (int r = 0; r < t; ++r) {
        if (walk[r] != cycle[0]) continue;
        bool fwd = true, bwd = true;
        for (int k = 0; k < t; ++k) {
            if (walk[(r + k) % t] != cycle[k]) fwd = false;
            if (walk[(r - k % t + t) % t] != cycle[k]) bwd = false;
        }
        if (fwd || bwd) return true;
    }
    return false;
}

}  // namespace detail

// Colors the instance constructively; deterministic, quadratic in the vertex
// count.  The precolored pair keeps c1, c2; every other vertex receives a
// color from its list, and adjacent vertices always differ.
inline Coloring thomassen_color(const PrecoloredInstance& inst, SolveStats* stats = nullptr) {
    const Graph& g = inst.graph;
    auto bad = [](const std::string& msg) {
        return Error(ErrorCode::precondition_violation, msg);
    };
    if (!is_connected(g)) throw bad("near-triangulation must be connected");
    check_lists(g, inst.lists);
    if (inst.outer_cycle.size() < 3) throw bad("outer cycle needs at least 3 vertices");
    for (int v : inst.outer_cycle) g.check_vertex(v);
    if (inst.c1 < 1 || inst.c1 > inst.lists.universe || inst.c2 < 1 ||
        inst.c2 > inst.lists.universe)
        throw bad("pair colors leave the universe");
    if (inst.c1 == inst.c2) throw bad("pair colors must differ");

    auto fs = trace_faces(g, inst.embedding);
    int outer = -1;
    if (fs.outer >= 0 && detail::cycle_matches_walk(inst.outer_cycle, fs.faces[fs.outer].walk))
        outer = fs.outer;
    for (int f = 0; f < static_cast<int>(fs.faces.size()) && outer < 0; ++f)
        if (detail::cycle_matches_walk(inst.outer_cycle, fs.faces[f].walk)) outer = f;
    if (outer < 0) throw bad("outer cycle does not bound a face");
    if (!fs.faces[outer].simple()) throw bad("outer face walk revisits a vertex");

    std::vector<Face> inner;
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        if (f == outer) continue;
        if (fs.faces[f].size() != 3)
            throw bad("inner face of size " + std::to_string(fs.faces[f].size()));
        inner.push_back(fs.faces[f]);
    }
    if (inner.empty()) throw bad("no inner faces");

    std::vector<char> on_outer(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v : inst.outer_cycle) on_outer[v] = 1;
    int p1 = inst.outer_cycle[0], p2 = inst.outer_cycle[1];
    for (int v = 1; v <= g.n; ++v) {
        if (v == p1 || v == p2) continue;
        int need = on_outer[v] ? 3 : 5;
        if (mask_count(inst.lists[v]) < need)
            throw bad("list of vertex " + std::to_string(v) + " has fewer than " +
                      std::to_string(need) + " colors");
    }

    detail::DiskColorer solver(g, inner, inst.lists.lists);
    solver.color_[p1] = inst.c1;
    solver.color_[p2] = inst.c2;
    std::vector<int> region(inner.size());
    for (std::size_t f = 0; f < inner.size(); ++f) region[f] = static_cast<int>(f);
    SolveStats local;
    solver.solve(inst.outer_cycle, std::move(region), 1, local);
    if (stats != nullptr) {
        stats->basic_steps += local.basic_steps;
        stats->max_depth = std::max(stats->max_depth, local.max_depth);
    }

    Coloring out = make_coloring(g.n, inst.lists.universe);
    for (int v = 1; v <= g.n; ++v) {
        if (solver.color_[v] == 0)
            throw bad("vertex " + std::to_string(v) + " is not inside the outer cycle");
        out[v] = solver.color_[v];
    }
    return out;
}

// One precolored vertex, all other lists of size >= 5, any planar graph with
// an embedding.  Each component is closed up to a near-triangulation rooted
// at its anchor (the precolored vertex, or its lowest vertex), the anchor's
// first rotation neighbor is precolored with the lowest usable list color,
// and the constructive solver runs on the result.  Added edges only constrain
// the search; the returned coloring is proper on the input graph.
inline Coloring list_color_planar_one_precolored(const Graph& g,
                                                 const std::optional<PlaneEmbedding>& emb, int v,
                                                 int c, const ListAssignment& lists,
                                                 SolveStats* stats = nullptr) {
    g.check_vertex(v);
    check_lists(g, lists);
    if (!emb.has_value())
        throw Error(ErrorCode::no_embedding, "constructive coloring needs a plane embedding");
    if (c < 1 || c > lists.universe)
        throw Error(ErrorCode::precondition_violation,
                    "color " + std::to_string(c) + " outside 1.." + std::to_string(lists.universe));
    for (int u = 1; u <= g.n; ++u)
        if (u != v && mask_count(lists[u]) < 5)
            throw Error(ErrorCode::list_too_small,
                        "list of vertex " + std::to_string(u) + " has " +
                            std::to_string(mask_count(lists[u])) + " colors, need 5");
    trace_faces(g, *emb);

    Coloring out = make_coloring(g.n, lists.universe);
    for (const auto& comp : connected_components(g)) {
        bool holds_v = std::binary_search(comp.begin(), comp.end(), v);
        int anchor = holds_v ? v : comp[0];
        int anchor_color = holds_v ? c : mask_lowest(lists[comp[0]]);

        if (comp.size() == 1) {
            out[anchor] = anchor_color;
            continue;
        }
        if (comp.size() == 2) {
            int other = comp[0] == anchor ? comp[1] : comp[0];
            out[anchor] = anchor_color;
            out[other] = mask_lowest(lists[other] & ~mask_of(anchor_color));
            continue;
        }

        auto sub = induced_subgraph(g, comp);
        auto semb = restrict_embedding(*emb, sub);
        int la = sub.to_local[anchor];
        semb.outer = {la, semb.rotation[la][0]};
        auto tri = triangulate(sub.graph, semb);

        auto fs = trace_faces(tri.graph, tri.embedding);
        std::vector<int> walk = fs.faces[fs.outer].walk;
        int t = static_cast<int>(walk.size());
        int at = -1;
        for (int r = 0; r < t; ++r)
            if (walk[r] == la && walk[(r + 1) % t] == tri.embedding.outer.second) at = r;
        if (at < 0)
            throw Error(ErrorCode::invalid_embedding, "designated dart left the outer face");
        std::rotate(walk.begin(), walk.begin() + at, walk.end());

        int partner_local = walk[1];
        int partner = sub.to_original[partner_local];
        int partner_color = mask_lowest(lists[partner] & ~mask_of(anchor_color));

        PrecoloredInstance inst;
        inst.graph = tri.graph;
        inst.embedding = tri.embedding;
        inst.outer_cycle = std::move(walk);
        inst.c1 = anchor_color;
        inst.c2 = partner_color;
        inst.lists = make_lists(sub.graph.n, lists.universe);
        for (int lv = 1; lv <= sub.graph.n; ++lv) inst.lists[lv] = lists[sub.to_original[lv]];
        inst.lists[la] = mask_of(anchor_color);
        inst.lists[partner_local] = mask_of(partner_color);

        Coloring sol = thomassen_color(inst, stats);
        for (int lv = 1; lv <= sub.graph.n; ++lv) out[sub.to_original[lv]] = sol[lv];
    }
    return out;
}

}  // namespace recolor

#endif
