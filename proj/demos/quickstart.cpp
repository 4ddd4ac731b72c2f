// Minimal end-to-end tour: generate an instance, plan a recoloring with both
// solvers, verify the sequences, and query the exact distance.

#include <iostream>

#include "recolor/engine.hpp"
#include "recolor/generate.hpp"
#include "recolor/statespace.hpp"
#include "recolor/verify.hpp"

int main() {
    using namespace recolor;

    auto inst = stacked_triangulation(12, 7);
    auto alpha = random_proper_coloring(inst.graph, 10, 8);
    auto beta = random_proper_coloring(inst.graph, 10, 9);

    auto constructive = recolor_run(inst.graph, inst.embedding, alpha, beta, 10,
                                    SolverKind::thomassen);
    auto searched = recolor_degenerate(inst.graph, alpha, beta, 10);

    for (const auto* seq : {&constructive.sequence, &searched}) {
        auto report = verify_sequence(inst.graph, alpha, beta, seq->steps, 10);
        std::cout << (seq == &searched ? "backtrack" : "thomassen") << ": steps="
                  << report.step_count << " valid=" << (report.valid ? "yes" : "no") << "\n";
    }
    std::cout << "phases=" << constructive.phases.size() << " bound="
              << inst.graph.n * inst.graph.n << "\n";

    auto tiny = stacked_triangulation(5, 3);
    ReconfigSpace space{tiny.graph, 10, 1'000'000};
    auto a5 = random_proper_coloring(tiny.graph, 10, 1);
    auto b5 = random_proper_coloring(tiny.graph, 10, 2);
    auto d = bfs_distance(space, a5, b5);
    std::cout << "n=5 exact distance: " << (d ? std::to_string(*d) : "unreachable") << "\n";
    return 0;
}
