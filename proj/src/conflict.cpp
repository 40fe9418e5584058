#include "twodist/conflict.hpp"

#include <algorithm>

namespace twodist {

int Coloring::colors_used() const {
    std::vector<int> seen;
    for (int c : colors)
        if (c != 0) seen.push_back(c);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

std::vector<std::vector<VertexId>> conflict_sets(const PlaneGraph& g) {
    std::vector<std::vector<VertexId>> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = g.second_neighborhood(v);
    return out;
}

ConflictReport validate(const PlaneGraph& g, const Coloring& c) {
    ConflictReport report;
    const std::size_t n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        if (!c.is_colored(v)) {
            report.uncolored.push_back(v);
            continue;
        }
        const int color = c.colors[v];
        if (color < 1 || color > c.palette) report.out_of_palette.push_back(v);
        for (VertexId u : g.second_neighborhood(v))
            if (v < u && c.is_colored(u) && c.colors[u] == color) report.violations.push_back({v, u, color});
    }
    report.valid = report.violations.empty() && report.uncolored.empty() && report.out_of_palette.empty();
    return report;
}

}  // namespace twodist
