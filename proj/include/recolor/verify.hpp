#ifndef RECOLOR_VERIFY_HPP
#define RECOLOR_VERIFY_HPP

#include <string>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

struct ListColoringReport {
    std::vector<std::pair<int, int>> monochromatic;  // edges, in edge-list order
    std::vector<int> off_list;                       // vertices colored outside their list

    bool ok() const { return monochromatic.empty() && off_list.empty(); }
};

inline ListColoringReport verify_list_coloring(const Graph& g, const ListAssignment& lists,
                                               const Coloring& c) {
    check_dimensions(g, c, "coloring");
    if (lists.size() != g.n)
        throw Error(ErrorCode::dimension_mismatch,
                    "lists cover " + std::to_string(lists.size()) + " vertices, graph has " +
                        std::to_string(g.n));
    ListColoringReport report;
    report.monochromatic = monochromatic_edges(g, c);
    for (int v = 1; v <= g.n; ++v)
        if (c[v] < 1 || c[v] > max_colors || !mask_has(lists[v], c[v]))
            report.off_list.push_back(v);
    return report;
}

enum class SequenceViolation {
    none,
    input_mismatch,      // dimensions or universe off
    improper_input,      // start or target coloring is not proper
    out_of_range,        // step names a bad vertex or color
    old_color_mismatch,  // step's old color disagrees with the replay
    no_op_step,          // step does not change the color
    improper_step,       // step makes the coloring improper
    wrong_endpoint,      // replay does not end at the target
};

inline const char* to_string(SequenceViolation v) {
    switch (v) {
    case SequenceViolation::none: return "none";
    case SequenceViolation::input_mismatch: return "input mismatch";
    case SequenceViolation::improper_input: return "improper input coloring";
    case SequenceViolation::out_of_range: return "step out of range";
    case SequenceViolation::old_color_mismatch: return "old color mismatch";
    case SequenceViolation::no_op_step: return "no-op step";
    case SequenceViolation::improper_step: return "improper intermediate coloring";
    case SequenceViolation::wrong_endpoint: return "wrong endpoint";
    }
    return "unknown";
}

struct SequenceReport {
    bool valid = false;
    SequenceViolation violation = SequenceViolation::none;
    int step_index = -1;  // 0-based step at fault, -1 when outside the steps
    std::string detail;
    long long step_count = 0;
    std::vector<int> per_vertex;  // [1..n] recolorings per vertex
    int max_per_vertex = 0;
};

// Independent replay of a recoloring sequence: checks every step against the
// current coloring, properness after every step, and the final endpoint.
// All violations are report content; nothing throws.
inline SequenceReport verify_sequence(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                      const std::vector<RecolorStep>& steps, int universe) {
    SequenceReport report;
    report.per_vertex.assign(static_cast<std::size_t>(g.n) + 1, 0);

    auto fail = [&](SequenceViolation kind, int index, std::string detail) {
        report.violation = kind;
        report.step_index = index;
        report.detail = std::move(detail);
        return report;
    };

    if (alpha.size() != g.n || beta.size() != g.n)
        return fail(SequenceViolation::input_mismatch, -1, "coloring size differs from graph");
    if (universe < 1 || universe > max_colors)
        return fail(SequenceViolation::input_mismatch, -1,
                    "universe " + std::to_string(universe) + " outside 1.." +
                        std::to_string(max_colors));
    for (const Coloring* c : {&alpha, &beta}) {
        if (!range_violations(*c).empty())
            return fail(SequenceViolation::improper_input, -1,
                        (c == &alpha ? "start" : "target") + std::string(" coloring leaves 1..") +
                            std::to_string(c->universe));
        auto mono = monochromatic_edges(g, *c);
        if (!mono.empty())
            return fail(SequenceViolation::improper_input, -1,
                        (c == &alpha ? "start" : "target") + std::string(" coloring repeats on edge (") +
                            std::to_string(mono[0].first) + "," + std::to_string(mono[0].second) + ")");
    }

    Coloring cur = alpha;
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        const auto& s = steps[i];
        if (s.vertex < 1 || s.vertex > g.n)
            return fail(SequenceViolation::out_of_range, i,
                        "vertex " + std::to_string(s.vertex));
        if (s.new_color < 1 || s.new_color > universe || s.old_color < 1 ||
            s.old_color > universe)
            return fail(SequenceViolation::out_of_range, i,
                        "color outside 1.." + std::to_string(universe));
        if (s.old_color != cur[s.vertex])
            return fail(SequenceViolation::old_color_mismatch, i,
                        "vertex " + std::to_string(s.vertex) + " holds " +
                            std::to_string(cur[s.vertex]) + ", step claims " +
                            std::to_string(s.old_color));
        if (s.new_color == s.old_color)
            return fail(SequenceViolation::no_op_step, i,
                        "vertex " + std::to_string(s.vertex) + " keeps color " +
                            std::to_string(s.new_color));
        cur[s.vertex] = s.new_color;
        for (int w : g.adj[s.vertex])
            if (cur[w] == s.new_color)
                return fail(SequenceViolation::improper_step, i,
                            "edge (" + std::to_string(std::min(s.vertex, w)) + "," +
                                std::to_string(std::max(s.vertex, w)) + ") turns monochromatic");
        ++report.per_vertex[s.vertex];
        ++report.step_count;
    }
    for (int v = 1; v <= g.n; ++v)
        if (cur[v] != beta[v])
            return fail(SequenceViolation::wrong_endpoint, -1,
                        "vertex " + std::to_string(v) + " ends at " + std::to_string(cur[v]) +
                            ", target is " + std::to_string(beta[v]));

    report.valid = true;
    for (int v = 1; v <= g.n; ++v)
        report.max_per_vertex = std::max(report.max_per_vertex, report.per_vertex[v]);
    return report;
}

}  // namespace recolor

#endif
