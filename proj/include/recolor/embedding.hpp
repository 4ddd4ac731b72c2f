#ifndef RECOLOR_EMBEDDING_HPP
#define RECOLOR_EMBEDDING_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Combinatorial plane embedding: rotation[v] lists the neighbors of v in
// clockwise order.  The outer face is designated by one of its darts (u,v);
// (0,0) selects a default, the face containing the lexicographically smallest
// dart.  Faces are traced with the rule
//     next(u -> v) = (v, w)  where w follows u clockwise in rotation[v],
// and validity is exactly Euler's formula V - E + F = 2 per component.
struct PlaneEmbedding {
    std::vector<std::vector<int>> rotation;  // [1..n], [0] unused
    std::pair<int, int> outer = {0, 0};
};

struct Face {
    std::vector<int> walk;  // w_i -> w_{i+1} (cyclically) are the face darts

    int size() const { return static_cast<int>(walk.size()); }

    bool simple() const {
        auto sorted = walk;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
};

struct FaceSet {
    std::vector<Face> faces;
    int outer = -1;  // index into faces, -1 when the graph has no edges
};

inline std::pair<int, int> default_outer_dart(const Graph& g) {
    for (int u = 1; u <= g.n; ++u)
        if (!g.adj[u].empty()) return {u, g.adj[u][0]};
    return {0, 0};
}

inline std::pair<int, int> resolve_outer(const Graph& g, const PlaneEmbedding& emb) {
    return emb.outer == std::pair<int, int>{0, 0} ? default_outer_dart(g) : emb.outer;
}

namespace detail {

// Position of each neighbor within rotation[v], for O(1) clockwise stepping.
struct RotationIndex {
    std::vector<std::unordered_map<int, int>> pos;

    explicit RotationIndex(const std::vector<std::vector<int>>& rot) {
        pos.resize(rot.size());
        for (std::size_t v = 1; v < rot.size(); ++v) {
            pos[v].reserve(rot[v].size() * 2);
            for (std::size_t i = 0; i < rot[v].size(); ++i)
                pos[v].emplace(rot[v][i], static_cast<int>(i));
        }
    }
};

inline std::vector<std::vector<int>> trace_orbits(const std::vector<std::vector<int>>& rot) {
    RotationIndex ri(rot);
    int n = static_cast<int>(rot.size()) - 1;
    std::vector<int> offset(static_cast<std::size_t>(n) + 2, 0);
    for (int v = 1; v <= n; ++v)
        offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    std::vector<char> seen(offset[n + 1], 0);
    std::vector<std::vector<int>> walks;
    for (int u = 1; u <= n; ++u) {
        for (int i = 0; i < static_cast<int>(rot[u].size()); ++i) {
            if (seen[offset[u] + i]) continue;
            std::vector<int> walk;
            int cu = u, ci = i;
            do {
                seen[offset[cu] + ci] = 1;
                walk.push_back(cu);
                int cv = rot[cu][ci];
                int j = ri.pos[cv].at(cu);
                ci = (j + 1) % static_cast<int>(rot[cv].size());
                cu = cv;
            } while (!(cu == u && ci == i));
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

}  // namespace detail

// Traces all face boundary walks and validates the embedding: the rotation
// table must permute each adjacency list, and every component must satisfy
// V - E + F = 2.  Throws INVALID_EMBEDDING or EULER_VIOLATION otherwise.
inline FaceSet trace_faces(const Graph& g, const PlaneEmbedding& emb) {
    if (static_cast<int>(emb.rotation.size()) != g.n + 1)
        throw Error(ErrorCode::invalid_embedding,
                    "rotation table covers " +
                        std::to_string(static_cast<int>(emb.rotation.size()) - 1) +
                        " vertices, graph has " + std::to_string(g.n));
    for (int v = 1; v <= g.n; ++v) {
        auto sorted = emb.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.adj[v])
            throw Error(ErrorCode::invalid_embedding,
                        "rotation of vertex " + std::to_string(v) +
                            " does not permute its neighbors");
    }

    FaceSet fs;
    for (auto& walk : detail::trace_orbits(emb.rotation))
        fs.faces.push_back(Face{std::move(walk)});

    auto comps = connected_components(g);
    std::vector<int> comp_of(static_cast<std::size_t>(g.n) + 1, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<long long> face_count(comps.size(), 0), edge_count(comps.size(), 0);
    for (const auto& f : fs.faces) ++face_count[comp_of[f.walk[0]]];
    for (auto [u, v] : g.edges) ++edge_count[comp_of[u]];
    for (std::size_t c = 0; c < comps.size(); ++c) {
        long long V = static_cast<long long>(comps[c].size());
        long long E = edge_count[c];
        long long F = face_count[c] + (V == 1 ? 1 : 0);
        if (V - E + F != 2)
            throw Error(ErrorCode::euler_violation,
                        "component containing vertex " + std::to_string(comps[c][0]) +
                            " has V=" + std::to_string(V) + " E=" + std::to_string(E) +
                            " F=" + std::to_string(F));
    }

    auto od = resolve_outer(g, emb);
    if (od != std::pair<int, int>{0, 0}) {
        for (std::size_t f = 0; f < fs.faces.size() && fs.outer < 0; ++f) {
            const auto& w = fs.faces[f].walk;
            for (std::size_t t = 0; t < w.size(); ++t)
                if (w[t] == od.first && w[(t + 1) % w.size()] == od.second) {
                    fs.outer = static_cast<int>(f);
                    break;
                }
        }
        if (fs.outer < 0)
            throw Error(ErrorCode::invalid_embedding,
                        "outer dart (" + std::to_string(od.first) + "," +
                            std::to_string(od.second) + ") is not a dart of the embedding");
    }
    return fs;
}

inline bool is_valid_embedding(const Graph& g, const PlaneEmbedding& emb) {
    try {
        trace_faces(g, emb);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// Embedding inherited by an induced subgraph: each rotation is filtered to the
// surviving neighbors, preserving cyclic order.
inline PlaneEmbedding restrict_embedding(const PlaneEmbedding& emb, const InducedSubgraph& sub) {
    PlaneEmbedding out;
    int k = sub.graph.n;
    out.rotation.assign(static_cast<std::size_t>(k) + 1, {});
    for (int v = 1; v <= k; ++v) {
        for (int w : emb.rotation[sub.to_original[v]])
            if (sub.to_local[w] != 0) out.rotation[v].push_back(sub.to_local[w]);
    }
    return out;
}

struct Triangulation {
    Graph graph;
    PlaneEmbedding embedding;
    std::vector<std::pair<int, int>> added;
};

namespace detail {

// Dart-based mutable embedding.  Darts come in twin pairs 2i/2i+1; cw_next
// chains the darts sharing a tail in clockwise order, so the face successor of
// d is cw_next[twin(d)].  Edge insertion is O(1) given the two darts after
// which the new darts are spliced.
struct DartMesh {
    int n = 0;
    std::vector<int> tail, head, cw_next;
    std::vector<int> first_dart;  // [1..n], -1 for isolated vertices
    std::unordered_map<std::uint64_t, int> dart_of;

    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    DartMesh(const Graph& g, const PlaneEmbedding& emb) : n(g.n) {
        tail.reserve(2 * g.edges.size());
        head.reserve(2 * g.edges.size());
        dart_of.reserve(4 * g.edges.size());
        for (auto [u, v] : g.edges) {
            dart_of[key(u, v)] = static_cast<int>(tail.size());
            tail.push_back(u);
            head.push_back(v);
            dart_of[key(v, u)] = static_cast<int>(tail.size());
            tail.push_back(v);
            head.push_back(u);
        }
        cw_next.assign(tail.size(), -1);
        first_dart.assign(static_cast<std::size_t>(n) + 1, -1);
        for (int v = 1; v <= n; ++v) {
            const auto& r = emb.rotation[v];
            if (r.empty()) continue;
            first_dart[v] = dart_of.at(key(v, r[0]));
            for (std::size_t i = 0; i < r.size(); ++i)
                cw_next[dart_of.at(key(v, r[i]))] = dart_of.at(key(v, r[(i + 1) % r.size()]));
        }
    }

    bool has_edge(int u, int v) const { return dart_of.count(key(u, v)) != 0; }

    int face_next(int d) const { return cw_next[d ^ 1]; }

    // New edge (x,y); the dart x->y is spliced right after dart ax (tail x),
    // and y->x right after ay (tail y).  Returns the dart x->y.
    int add_edge(int x, int y, int ax, int ay) {
        int dxy = static_cast<int>(tail.size());
        tail.push_back(x);
        head.push_back(y);
        tail.push_back(y);
        head.push_back(x);
        cw_next.push_back(-1);
        cw_next.push_back(-1);
        cw_next[dxy] = cw_next[ax];
        cw_next[ax] = dxy;
        cw_next[dxy + 1] = cw_next[ay];
        cw_next[ay] = dxy + 1;
        dart_of[key(x, y)] = dxy;
        dart_of[key(y, x)] = dxy + 1;
        return dxy;
    }

    // Face of d as (darts, vertex walk).
    void trace_face(int d, std::vector<int>& darts, std::vector<int>& walk) const {
        darts.clear();
        walk.clear();
        int c = d;
        do {
            darts.push_back(c);
            walk.push_back(tail[c]);
            c = face_next(c);
        } while (c != d);
    }

    std::vector<std::vector<int>> rotations() const {
        std::vector<std::vector<int>> rot(static_cast<std::size_t>(n) + 1);
        for (int v = 1; v <= n; ++v) {
            int d0 = first_dart[v];
            if (d0 < 0) continue;
            int d = d0;
            do {
                rot[v].push_back(head[d]);
                d = cw_next[d];
            } while (d != d0);
        }
        return rot;
    }
};

}  // namespace detail

// Adds edges until every face except the designated outer one is a triangle,
// keeping the embedding planar.  Multiply-connected faces are first stitched
// into simple cycles; each remaining big face is fanned from its lowest-index
// vertex, falling back to the lexicographically first insertable diagonal when
// the fan edge already exists elsewhere in the graph.
inline Triangulation triangulate(const Graph& g, const PlaneEmbedding& emb) {
    if (g.n < 3)
        throw Error(ErrorCode::precondition_violation,
                    "triangulation needs at least 3 vertices, got " + std::to_string(g.n));
    if (!is_connected(g)) throw Error(ErrorCode::not_connected, "graph is not connected");
    trace_faces(g, emb);

    detail::DartMesh mesh(g, emb);
    auto [ou, ov] = resolve_outer(g, emb);
    int outer_dart = mesh.dart_of.at(detail::DartMesh::key(ou, ov));

    std::vector<std::pair<int, int>> added;
    std::deque<int> work;
    {
        std::vector<char> seen(mesh.tail.size(), 0);
        std::vector<int> darts, walk;
        for (std::size_t d = 0; d < mesh.tail.size(); ++d) {
            if (seen[d]) continue;
            mesh.trace_face(static_cast<int>(d), darts, walk);
            for (int x : darts) seen[x] = 1;
            work.push_back(static_cast<int>(d));
        }
    }

    std::vector<int> darts, walk;
    long long guard = 40LL * (g.n + g.edge_count() + 5);
    while (!work.empty()) {
        if (--guard < 0)
            throw Error(ErrorCode::invalid_embedding, "face surgery failed to converge");
        int d = work.front();
        work.pop_front();
        mesh.trace_face(d, darts, walk);
        int k = static_cast<int>(walk.size());

        auto add_diagonal = [&](int i, int j) {
            int x = walk[i], y = walk[j];
            int ax = darts[(i + k - 1) % k] ^ 1;  // dart x -> predecessor of x
            int ay = darts[(j + k - 1) % k] ^ 1;
            int nd = mesh.add_edge(x, y, ax, ay);
            added.emplace_back(std::min(x, y), std::max(x, y));
            work.push_back(nd);
            work.push_back(nd ^ 1);
        };

        // Stitch a pinch: the walk revisits a cut vertex; connect the two
        // successor vertices, which lie in different blocks.
        bool repeated = !Face{walk}.simple();
        if (repeated) {
            bool fixed = false;
            for (int p = 0; p < k && !fixed; ++p)
                for (int q = p + 1; q < k && !fixed; ++q) {
                    if (walk[p] != walk[q]) continue;
                    int a = walk[(p + 1) % k], b = walk[(q + 1) % k];
                    if (a != b && !mesh.has_edge(a, b)) {
                        add_diagonal((p + 1) % k, (q + 1) % k);
                        fixed = true;
                    }
                }
            if (!fixed)
                throw Error(ErrorCode::invalid_embedding, "pinched face cannot be stitched");
            continue;
        }

        if (k < 4) continue;
        bool is_outer = false;
        for (int x : darts)
            if (x == outer_dart) {
                is_outer = true;
                break;
            }
        if (is_outer) continue;

        int s = static_cast<int>(std::min_element(walk.begin(), walk.end()) - walk.begin());
        bool split = false;
        for (int t = 2; t <= k - 2 && !split; ++t) {
            int j = (s + t) % k;
            if (!mesh.has_edge(walk[s], walk[j])) {
                add_diagonal(s, j);
                split = true;
            }
        }
        for (int i = 0; i < k && !split; ++i)
            for (int t = 2; t <= k - 2 && !split; ++t) {
                int j = (i + t) % k;
                if (i < j && !mesh.has_edge(walk[i], walk[j])) {
                    add_diagonal(i, j);
                    split = true;
                }
            }
        if (!split)
            throw Error(ErrorCode::invalid_embedding, "face admits no diagonal");
    }

    Triangulation out;
    auto edges = g.edges;
    edges.insert(edges.end(), added.begin(), added.end());
    out.graph = Graph::from_edges(g.n, std::move(edges));
    out.embedding.rotation = mesh.rotations();
    out.embedding.outer = {mesh.tail[outer_dart], mesh.head[outer_dart]};
    out.added = std::move(added);

    auto fs = trace_faces(out.graph, out.embedding);
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
        if (f != fs.outer && fs.faces[f].size() != 3)
            throw Error(ErrorCode::invalid_embedding, "triangulation left a non-triangular face");
    return out;
}

}  // namespace recolor

#endif
