#ifndef RECOLOR_TESTS_SUPPORT_HPP
#define RECOLOR_TESTS_SUPPORT_HPP

// Shared oracles, fixtures, and instance generators for the test suite.

#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/degeneracy.hpp"
#include "recolor/embedding.hpp"
#include "recolor/generate.hpp"
#include "recolor/graph.hpp"
#include "recolor/thomassen.hpp"

namespace testsupport {

// Degeneracy from its definition: the largest minimum degree over all
// nonempty induced subgraphs.  Exponential; callers stay below n = 15.
inline int brute_degeneracy(const recolor::Graph& g) {
    int best = 0;
    for (unsigned mask = 1; mask < 1u << g.n; ++mask) {
        int min_deg = g.n;
        for (int v = 1; v <= g.n; ++v) {
            if ((mask >> (v - 1) & 1u) == 0) continue;
            int d = 0;
            for (int w : g.adj[v])
                if (mask >> (w - 1) & 1u) ++d;
            min_deg = std::min(min_deg, d);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

// Length of a shortest cycle, -1 for forests.  BFS from every vertex; a
// non-tree edge seen from the root on a shortest cycle closes it exactly.
inline int girth(const recolor::Graph& g) {
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(g.n) + 1);
    std::vector<int> parent(static_cast<std::size_t>(g.n) + 1);
    for (int s = 1; s <= g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), 0);
        std::deque<int> queue = {s};
        dist[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

struct EnumerationResult {
    bool sat = false;
    recolor::Coloring witness;  // meaningful only when sat
    long long assignments = 0;
};

// Exhaustive list-coloring decision: walks the full product of the lists in
// odometer order and stops at the first proper assignment.  The caller keeps
// the product small.
inline EnumerationResult enumerate_list_coloring(const recolor::Graph& g,
                                                 const recolor::ListAssignment& lists) {
    int n = g.n;
    EnumerationResult res;
    res.witness = recolor::make_coloring(n, lists.universe);
    std::vector<std::vector<int>> menu(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        menu[v] = recolor::mask_to_colors(lists[v]);
        if (menu[v].empty()) return res;
    }
    std::vector<int> idx(static_cast<std::size_t>(n) + 1, 0);
    recolor::Coloring c = recolor::make_coloring(n, lists.universe);
    while (true) {
        ++res.assignments;
        for (int v = 1; v <= n; ++v) c[v] = menu[v][idx[v]];
        bool proper = true;
        for (auto [u, v] : g.edges)
            if (c[u] == c[v]) {
                proper = false;
                break;
            }
        if (proper) {
            res.sat = true;
            res.witness = c;
            return res;
        }
        int v = 1;
        while (v <= n && ++idx[v] == static_cast<int>(menu[v].size())) {
            idx[v] = 0;
            ++v;
        }
        if (v > n) return res;
    }
}

inline long long list_product(const recolor::ListAssignment& lists) {
    long long p = 1;
    for (int v = 1; v <= lists.size(); ++v) {
        p *= recolor::mask_count(lists[v]);
        if (p > 100'000'000LL) return p;
    }
    return p;
}

// Every connected graph on n labeled vertices, one representative per
// isomorphism class.  Canonical form is the minimum adjacency bitmask over
// all vertex permutations; callers stay at n <= 5.
inline std::vector<recolor::Graph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    int s = static_cast<int>(slots.size());
    std::vector<std::vector<int>> sid(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
    for (int i = 0; i < s; ++i) {
        sid[slots[i].first][slots[i].second] = i;
        sid[slots[i].second][slots[i].first] = i;
    }

    std::vector<recolor::Graph> out;
    std::set<unsigned> seen;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (unsigned mask = 0; mask < 1u << s; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < s; ++i)
            if (mask >> i & 1u) edges.push_back(slots[i]);
        auto g = recolor::Graph::from_edges(n, std::move(edges));
        if (!recolor::is_connected(g)) continue;
        unsigned canon = mask;
        std::iota(perm.begin(), perm.end(), 1);
        do {
            unsigned pm = 0;
            for (int i = 0; i < s; ++i)
                if (mask >> i & 1u)
                    pm |= 1u << sid[perm[slots[i].first - 1]][perm[slots[i].second - 1]];
            canon = std::min(canon, pm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(canon).second) out.push_back(std::move(g));
    }
    return out;
}

// All connected planar graphs on up to 5 vertices up to isomorphism; on this
// size everything is planar except K5.
inline std::vector<recolor::Graph> small_planar_fixtures() {
    std::vector<recolor::Graph> out;
    for (int n = 1; n <= 5; ++n)
        for (auto& g : connected_graphs_up_to_iso(n)) {
            if (g.n == 5 && g.edge_count() == 10) continue;
            out.push_back(std::move(g));
        }
    return out;
}

// size distinct colors per vertex, sampled without replacement from
// 1..universe.
inline recolor::ListAssignment random_lists(int n, int universe, int size,
                                            std::mt19937_64& rng) {
    auto l = recolor::make_lists(n, universe);
    std::vector<int> pool(static_cast<std::size_t>(universe));
    for (int v = 1; v <= n; ++v) {
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(universe - i));
            std::swap(pool[i], pool[j]);
            l[v] |= recolor::mask_of(pool[i]);
        }
    }
    return l;
}

namespace detail {

inline void finish_disk_instance(recolor::PrecoloredInstance& inst, std::vector<int> cycle,
                                 std::mt19937_64& rng) {
    std::rotate(cycle.begin(), cycle.begin() + rng() % cycle.size(), cycle.end());
    if (rng() % 2 == 1) std::reverse(cycle.begin() + 1, cycle.end());
    inst.c1 = 1 + static_cast<int>(rng() % 10);
    do {
        inst.c2 = 1 + static_cast<int>(rng() % 10);
    } while (inst.c2 == inst.c1);
    inst.lists = random_lists(inst.graph.n, 10, 5, rng);
    inst.lists[cycle[0]] = recolor::mask_of(inst.c1);
    inst.lists[cycle[1]] = recolor::mask_of(inst.c2);
    inst.outer_cycle = std::move(cycle);
}

}  // namespace detail

// Near-triangulation instance with a triangular boundary: a stacked
// triangulation with random 5-lists and a random precolored boundary pair.
inline recolor::PrecoloredInstance disk_from_stacked(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto eg = recolor::stacked_triangulation(n, rng());
    auto fs = recolor::trace_faces(eg.graph, eg.embedding);
    recolor::PrecoloredInstance inst;
    inst.graph = eg.graph;
    inst.embedding = eg.embedding;
    detail::finish_disk_instance(inst, fs.faces[fs.outer].walk, rng);
    return inst;
}

// Near-triangulation instance with a polygon boundary: a triangulated cycle
// with extra vertices stacked into random inner faces.
inline recolor::PrecoloredInstance disk_from_polygon(int boundary, int extra,
                                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto g = recolor::cycle_graph(boundary);
    recolor::PlaneEmbedding emb;
    emb.rotation.assign(static_cast<std::size_t>(boundary) + 1, {});
    for (int v = 1; v <= boundary; ++v) {
        int prev = v == 1 ? boundary : v - 1;
        int next = v == boundary ? 1 : v + 1;
        emb.rotation[v] = {prev, next};
    }
    emb.outer = {1, 2};
    auto tri = recolor::triangulate(g, emb);

    recolor::Graph cur = std::move(tri.graph);
    recolor::PlaneEmbedding cemb = std::move(tri.embedding);
    for (int w = boundary + 1; w <= boundary + extra; ++w) {
        auto fs = recolor::trace_faces(cur, cemb);
        std::vector<int> inner;
        for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
            if (f != fs.outer) inner.push_back(f);
        const auto& walk = fs.faces[inner[rng() % inner.size()]].walk;
        int a = walk[0], b = walk[1], c = walk[2];
        auto edges = cur.edges;
        edges.emplace_back(a, w);
        edges.emplace_back(b, w);
        edges.emplace_back(c, w);
        recolor::detail::insert_after(cemb.rotation[b], a, w);
        recolor::detail::insert_after(cemb.rotation[c], b, w);
        recolor::detail::insert_after(cemb.rotation[a], c, w);
        cemb.rotation.push_back({a, c, b});
        cur = recolor::Graph::from_edges(w, std::move(edges));
    }

    auto fs = recolor::trace_faces(cur, cemb);
    recolor::PrecoloredInstance inst;
    inst.graph = std::move(cur);
    inst.embedding = std::move(cemb);
    detail::finish_disk_instance(inst, fs.faces[fs.outer].walk, rng);
    return inst;
}

// Random planar graph with an embedding: a stacked triangulation with each
// edge kept independently with the given percentage.
inline recolor::EmbeddedGraph random_planar(int n, int keep_percent, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto eg = recolor::stacked_triangulation(n, rng());
    std::vector<std::pair<int, int>> kept;
    std::set<std::pair<int, int>> dropped;
    for (auto e : eg.graph.edges) {
        if (static_cast<int>(rng() % 100) < keep_percent)
            kept.push_back(e);
        else
            dropped.insert(e);
    }
    recolor::EmbeddedGraph out;
    out.graph = recolor::Graph::from_edges(n, std::move(kept));
    out.embedding.rotation.assign(static_cast<std::size_t>(n) + 1, {});
    for (int v = 1; v <= n; ++v)
        for (int w : eg.embedding.rotation[v])
            if (dropped.count({std::min(v, w), std::max(v, w)}) == 0)
                out.embedding.rotation[v].push_back(w);
    return out;
}

// Ordering fixed to 1..n regardless of degrees; back degrees still honest.
inline recolor::DegeneracyOrdering identity_ordering(const recolor::Graph& g) {
    recolor::DegeneracyOrdering ord;
    ord.order.assign(static_cast<std::size_t>(g.n) + 1, 0);
    ord.position.assign(static_cast<std::size_t>(g.n) + 1, 0);
    ord.back_degree.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        ord.order[v] = v;
        ord.position[v] = v;
        int b = 0;
        for (int w : g.adj[v])
            if (w < v) ++b;
        ord.back_degree[v] = b;
        ord.degeneracy = std::max(ord.degeneracy, b);
    }
    return ord;
}

// K4 in its single plane rotation (up to reflection).
inline recolor::EmbeddedGraph k4_fixture() {
    recolor::EmbeddedGraph eg;
    eg.graph = recolor::Graph::from_edges(
        4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    eg.embedding.rotation = {{}, {2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}};
    return eg;
}

inline recolor::Graph octahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v)
            if (u + v != 7) edges.emplace_back(u, v);
    return recolor::Graph::from_edges(6, std::move(edges));
}

inline recolor::Graph cube() {
    return recolor::Graph::from_edges(8, {{1, 2},
                                          {2, 3},
                                          {3, 4},
                                          {1, 4},
                                          {5, 6},
                                          {6, 7},
                                          {7, 8},
                                          {5, 8},
                                          {1, 5},
                                          {2, 6},
                                          {3, 7},
                                          {4, 8}});
}

// Two pentagonal caps joined by an antiprism belt; 5-regular and planar.
inline recolor::Graph icosahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        int a = 2 + i, an = 2 + (i + 1) % 5;
        int b = 7 + i, bn = 7 + (i + 1) % 5;
        edges.emplace_back(1, a);
        edges.emplace_back(a, an);
        edges.emplace_back(b, bn);
        edges.emplace_back(12, b);
        edges.emplace_back(a, b);
        edges.emplace_back(a, bn);
    }
    return recolor::Graph::from_edges(12, std::move(edges));
}

// Three nested pentagons with spokes; 3-regular, planar, girth 5.
inline recolor::Graph dodecahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        edges.emplace_back(1 + i, 1 + j);       // outer pentagon
        edges.emplace_back(1 + i, 6 + i);       // outer spokes
        edges.emplace_back(16 + i, 16 + j);     // inner pentagon
        edges.emplace_back(11 + i, 16 + i);     // inner spokes
        edges.emplace_back(6 + i, 11 + i);      // belt, alternating
        edges.emplace_back(11 + i, 6 + j);
    }
    return recolor::Graph::from_edges(20, std::move(edges));
}

// Planar girth >= 5 graphs on at most 40 vertices, 2- or 3-degenerate.
inline std::vector<recolor::Graph> girth5_fixtures() {
    std::vector<recolor::Graph> out;
    for (int n = 5; n <= 36; ++n) out.push_back(recolor::cycle_graph(n));
    out.push_back(recolor::subdivide_all_edges(
        recolor::stacked_triangulation(4, 0).graph));
    for (int n0 = 5; n0 <= 11; ++n0) {
        out.push_back(recolor::subdivide_all_edges(
            recolor::stacked_triangulation(n0, n0).graph));
        out.push_back(recolor::subdivide_all_edges(
            recolor::stacked_triangulation(n0, 100 + n0).graph));
    }
    out.push_back(dodecahedron());
    out.push_back(recolor::subdivide_all_edges(octahedron()));
    out.push_back(recolor::subdivide_all_edges(cube()));
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// Fresh scratch directory for one test.
inline std::string temp_dir(const std::string& tag) {
    std::string path = "/tmp/recolor_tests/" + tag;
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
    return path;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr merged
};

inline RunResult run_command(const std::string& command) {
    RunResult res;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace testsupport

#endif
