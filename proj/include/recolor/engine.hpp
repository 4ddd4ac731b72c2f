#ifndef RECOLOR_ENGINE_HPP
#define RECOLOR_ENGINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recolor/backtrack.hpp"
#include "recolor/coloring.hpp"
#include "recolor/degeneracy.hpp"
#include "recolor/embedding.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"
#include "recolor/thomassen.hpp"

namespace recolor {

enum class SolverKind { thomassen, backtrack };

// Raised when the backtracking solver finds a phase without a list coloring;
// carries the failing lists as the certificate (vertex_ids maps the local
// vertices back to the input graph).
class SolverUnsatError : public Error {
public:
    SolverUnsatError(int anchor_position, ListAssignment lists, std::vector<int> vertex_ids)
        : Error(ErrorCode::solver_unsat,
                "phase at order position " + std::to_string(anchor_position) +
                    " admits no list coloring"),
          anchor_position_(anchor_position),
          lists_(std::move(lists)),
          vertex_ids_(std::move(vertex_ids)) {}

    int anchor_position() const { return anchor_position_; }
    const ListAssignment& lists() const { return lists_; }
    const std::vector<int>& vertex_ids() const { return vertex_ids_; }

private:
    int anchor_position_;
    ListAssignment lists_;
    std::vector<int> vertex_ids_;
};

// Position of the first vertex, in degeneracy order, where the two colorings
// disagree; empty when they are equal.
inline std::optional<int> find_anchor(const DegeneracyOrdering& ord, const Coloring& a,
                                      const Coloring& b) {
    if (a.size() != ord.size() || b.size() != ord.size())
        throw Error(ErrorCode::dimension_mismatch,
                    "colorings cover " + std::to_string(a.size()) + "/" +
                        std::to_string(b.size()) + " vertices, order has " +
                        std::to_string(ord.size()));
    for (int i = 1; i <= ord.size(); ++i) {
        int v = ord.order[i];
        if (a[v] != b[v]) return i;
    }
    return std::nullopt;
}

struct PhaseLists {
    InducedSubgraph sub;      // vertices from order position h onward
    ListAssignment lists;     // indexed by the subgraph's local ids
    int anchor_local = 0;
};

// Lists for one phase: the anchor v_h is pinned to its target color, and
// every later vertex may use any color not held by an earlier neighbor in the
// full graph, earlier meaning a smaller order position.
inline PhaseLists build_phase_lists(const Graph& g, const DegeneracyOrdering& ord,
                                    const Coloring& alpha, const Coloring& beta, int h,
                                    int universe) {
    if (ord.size() != g.n)
        throw Error(ErrorCode::dimension_mismatch, "order does not cover the graph");
    if (h < 1 || h > g.n)
        throw Error(ErrorCode::precondition_violation,
                    "anchor position " + std::to_string(h) + " outside 1.." + std::to_string(g.n));
    for (int i = 1; i < h; ++i)
        if (alpha[ord.order[i]] != beta[ord.order[i]])
            throw Error(ErrorCode::precondition_violation,
                        "colorings disagree before the anchor position");
    int vh = ord.order[h];
    if (alpha[vh] == beta[vh])
        throw Error(ErrorCode::precondition_violation,
                    "colorings agree at the anchor position");

    PhaseLists out;
    std::vector<int> tail;
    tail.reserve(g.n - h + 1);
    for (int i = h; i <= g.n; ++i) tail.push_back(ord.order[i]);
    out.sub = induced_subgraph(g, std::move(tail));
    out.lists = make_lists(out.sub.graph.n, universe);
    out.anchor_local = out.sub.to_local[vh];
    for (int lv = 1; lv <= out.sub.graph.n; ++lv) {
        int w = out.sub.to_original[lv];
        if (w == vh) {
            out.lists[lv] = mask_of(beta[vh]);
            continue;
        }
        ColorMask used = 0;
        for (int x : g.adj[w])
            if (ord.position[x] < ord.position[w]) used |= mask_of(alpha[x]);
        out.lists[lv] = mask_full(universe) & ~used;
    }
    return out;
}

struct PhaseReport {
    int anchor_position = 0;
    int anchor_vertex = 0;
    std::vector<int> recolored;  // in emission order, highest position first
};

struct PhaseResult {
    PhaseReport report;
    std::vector<RecolorStep> steps;
    Coloring after;
};

// One phase: solve the phase lists on the tail subgraph, then emit the
// recolorings from the last order position down to the anchor, skipping
// vertices already at their phase color.  Every intermediate coloring stays
// proper, and positions before h are untouched.
inline PhaseResult run_phase(const Graph& g, const std::optional<PlaneEmbedding>& emb,
                             const DegeneracyOrdering& ord, const Coloring& alpha,
                             const Coloring& beta, int h, int universe, SolverKind solver,
                             SolveStats* stats = nullptr) {
    PhaseLists pl = build_phase_lists(g, ord, alpha, beta, h, universe);
    Coloring target;
    if (solver == SolverKind::thomassen) {
        if (!emb.has_value())
            throw Error(ErrorCode::embedding_required,
                        "the constructive solver needs an embedding; use the backtracking solver");
        auto semb = restrict_embedding(*emb, pl.sub);
        ListAssignment lists = pl.lists;
        if (universe > 10)
            for (int lv = 1; lv <= pl.sub.graph.n; ++lv)
                if (lv != pl.anchor_local) lists[lv] = mask_keep_lowest(lists[lv], 5);
        target = list_color_planar_one_precolored(pl.sub.graph, semb, pl.anchor_local,
                                                  beta[ord.order[h]], lists, stats);
    } else {
        auto sol = backtrack_list_color(pl.sub.graph, pl.lists);
        if (!sol.has_value()) throw SolverUnsatError(h, pl.lists, pl.sub.to_original);
        target = *sol;
    }

    PhaseResult out;
    out.report.anchor_position = h;
    out.report.anchor_vertex = ord.order[h];
    out.after = alpha;
    for (int i = g.n; i >= h; --i) {
        int v = ord.order[i];
        int c = target[pl.sub.to_local[v]];
        if (out.after[v] == c) continue;
        out.steps.push_back({v, out.after[v], c});
        out.report.recolored.push_back(v);
        out.after[v] = c;
    }
    return out;
}

struct RecolorRun {
    RecolorSequence sequence;
    std::vector<PhaseReport> phases;
};

// Transforms alpha into beta through single-vertex recolorings, one phase per
// anchor, with the anchor position strictly increasing.  At most n phases of
// at most n steps each.
inline RecolorRun recolor_run(const Graph& g, const std::optional<PlaneEmbedding>& emb,
                              const Coloring& alpha, const Coloring& beta, int universe = 10,
                              SolverKind solver = SolverKind::thomassen,
                              SolveStats* stats = nullptr) {
    check_dimensions(g, alpha, "start coloring");
    check_dimensions(g, beta, "target coloring");
    if (universe < 1 || universe > max_colors)
        throw Error(ErrorCode::precondition_violation,
                    "color count " + std::to_string(universe) + " outside 1.." +
                        std::to_string(max_colors));
    if (alpha.universe != universe || beta.universe != universe)
        throw Error(ErrorCode::dimension_mismatch,
                    "coloring universe differs from the requested color count");
    const std::pair<const char*, const Coloring*> sides[] = {{"start", &alpha},
                                                             {"target", &beta}};
    for (auto [name, c] : sides) {
        auto rv = range_violations(*c);
        if (!rv.empty())
            throw Error(ErrorCode::improper_input,
                        std::string(name) + " coloring leaves 1.." + std::to_string(universe) +
                            " at vertex " + std::to_string(rv[0]));
        auto mono = monochromatic_edges(g, *c);
        if (!mono.empty())
            throw Error(ErrorCode::improper_input,
                        std::string(name) + " coloring repeats on edge (" +
                            std::to_string(mono[0].first) + "," + std::to_string(mono[0].second) +
                            ")");
    }
    if (solver == SolverKind::thomassen) {
        if (universe < 10)
            throw Error(ErrorCode::precondition_violation,
                        "the constructive solver needs at least 10 colors, got " +
                            std::to_string(universe));
        if (!emb.has_value())
            throw Error(ErrorCode::embedding_required,
                        "the constructive solver needs an embedding; use the backtracking solver");
        trace_faces(g, *emb);
    }

    auto ord = degeneracy_ordering(g);
    RecolorRun out;
    out.sequence.start = alpha;
    out.sequence.universe = universe;
    Coloring cur = alpha;
    int last = 0;
    while (auto h = find_anchor(ord, cur, beta)) {
        if (*h <= last)
            throw Error(ErrorCode::precondition_violation, "anchor position failed to advance");
        last = *h;
        PhaseResult pr = run_phase(g, emb, ord, cur, beta, *h, universe, solver, stats);
        out.sequence.steps.insert(out.sequence.steps.end(), pr.steps.begin(), pr.steps.end());
        out.phases.push_back(std::move(pr.report));
        cur = std::move(pr.after);
    }
    return out;
}

inline RecolorSequence recolor(const Graph& g, const std::optional<PlaneEmbedding>& emb,
                               const Coloring& alpha, const Coloring& beta, int universe = 10,
                               SolverKind solver = SolverKind::thomassen,
                               SolveStats* stats = nullptr) {
    return recolor_run(g, emb, alpha, beta, universe, solver, stats).sequence;
}

// Same engine on the backtracking solver: works for any graph whose phases
// stay list-colorable, in particular any k-degenerate graph with
// universe >= k + 1 whose phase instances the search can solve.
inline RecolorSequence recolor_degenerate(const Graph& g, const Coloring& alpha,
                                          const Coloring& beta, int universe) {
    return recolor(g, std::nullopt, alpha, beta, universe, SolverKind::backtrack);
}

}  // namespace recolor

#endif
