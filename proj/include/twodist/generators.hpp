#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "twodist/plane_graph.hpp"

namespace twodist {

/// Names accepted by named(), in corpus order.
const std::vector<std::string_view>& named_graphs();

/// Fixed embedding of a named graph (platonic solids, small cycles, and the
/// special-vertex fixtures fig1a..fig2c). Throws UnknownName.
PlaneGraph named(std::string_view name);

/// Rotation text that named(name) is parsed from.
std::string_view named_text(std::string_view name);

/// Seeded connected plane graph with max degree <= 5 and between n/2 and n
/// vertices: a random stacked triangulation, trimmed at high-degree
/// vertices, keeping the largest component. Throws GenerationFailed.
PlaneGraph random_plane(std::size_t n, std::uint64_t seed);

}  // namespace twodist
