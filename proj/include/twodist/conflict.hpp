#pragma once

#include <cstddef>
#include <vector>

#include "twodist/plane_graph.hpp"

namespace twodist {

inline constexpr int kDefaultPalette = 16;

/// Partial vertex coloring; color 0 marks an uncolored vertex.
struct Coloring {
    int palette = kDefaultPalette;
    std::vector<int> colors;

    Coloring() = default;
    explicit Coloring(std::size_t vertices, int palette_size = kDefaultPalette)
        : palette(palette_size), colors(vertices, 0) {}

    bool is_colored(VertexId v) const { return v < colors.size() && colors[v] != 0; }
    int colors_used() const;

    bool operator==(const Coloring&) const = default;
};

struct Violation {
    VertexId u = 0;
    VertexId v = 0;
    int color = 0;
    bool operator==(const Violation&) const = default;
};

struct ConflictReport {
    bool valid = false;
    std::vector<Violation> violations;      // u < v, distance(u, v) <= 2
    std::vector<VertexId> uncolored;
    std::vector<VertexId> out_of_palette;   // colors outside [1, palette]
};

/// N2(v) for every vertex: the conflict graph of a 2-distance coloring.
std::vector<std::vector<VertexId>> conflict_sets(const PlaneGraph& g);

/// Exhaustive check of `c` against the 2-distance condition.
ConflictReport validate(const PlaneGraph& g, const Coloring& c);

}  // namespace twodist
