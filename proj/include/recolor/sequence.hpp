#ifndef RECOLOR_SEQUENCE_HPP
#define RECOLOR_SEQUENCE_HPP

#include <cstdint>
#include <vector>

#include "recolor/coloring.hpp"

namespace recolor {

struct RecolorStep {
    int vertex;
    int old_color;
    int new_color;

    bool operator==(const RecolorStep&) const = default;
};

struct RecolorSequence {
    Coloring start;
    int universe = 0;
    std::vector<RecolorStep> steps;
};

// Checksum over the steps: sum of vertex * new_color, mod 2^32.
inline std::uint32_t sequence_checksum(const std::vector<RecolorStep>& steps) {
    std::uint32_t acc = 0;
    for (const auto& s : steps)
        acc += static_cast<std::uint32_t>(s.vertex) * static_cast<std::uint32_t>(s.new_color);
    return acc;
}

// Replay without validation; the verifier is the checked counterpart.
inline Coloring final_coloring(const RecolorSequence& seq) {
    Coloring c = seq.start;
    for (const auto& s : seq.steps) c[s.vertex] = s.new_color;
    return c;
}

}  // namespace recolor

#endif
