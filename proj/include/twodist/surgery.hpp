#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twodist/plane_graph.hpp"

namespace twodist {

using Edge = std::pair<VertexId, VertexId>;

inline constexpr int kMaxDegree = 5;
inline constexpr VertexId kRemoved = static_cast<VertexId>(-1);

enum class SurgeryStatus { Ok, NotNeighbor, EmbeddingBroken, DegreeOverflow };

/// Result of deleting one vertex and joining some of its former neighbors.
struct Surgery {
    SurgeryStatus status = SurgeryStatus::Ok;
    std::optional<PlaneGraph> graph;        // set iff status == Ok
    std::vector<VertexId> renumber;          // old id -> new id, kRemoved for the deleted vertex
    std::vector<Edge> added;                 // chords actually inserted, in old ids
    std::string detail;
};

/// Delete `removed` and insert `chords` (pairs of its former neighbors)
/// into the face left behind. Chords already present as edges are skipped.
///
/// At each former neighbor u the chords replace `removed` in u's rotation,
/// ordered by the clockwise position of their other endpoint around
/// `removed`, starting just after u. Non-crossing chord sets therefore stay
/// planar; crossing ones fail the Euler recount and report EmbeddingBroken.
Surgery delete_and_join(const PlaneGraph& g, VertexId removed, std::span<const Edge> chords,
                        int max_degree = kMaxDegree);

/// Fast properness test for a single-vertex deletion: every two former
/// neighbors of the deleted vertex are within distance 2 in the result.
/// (Pairs whose short paths avoid the deleted vertex survive untouched.)
bool neighbors_stay_close(const PlaneGraph& g, VertexId removed, const Surgery& s);

}  // namespace twodist
