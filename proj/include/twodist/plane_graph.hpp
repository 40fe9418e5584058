#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twodist/error.hpp"

namespace twodist {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;
using DartId = std::uint32_t;

/// Ordered vertex pair; one side of an edge.
struct Dart {
    VertexId from = 0;
    VertexId to = 0;
    bool operator==(const Dart&) const = default;
};

/// A closed boundary walk under the face-tracing permutation.
struct Face {
    std::vector<Dart> boundary;
    std::size_t length() const noexcept { return boundary.size(); }
};

/// Clockwise neighbor order per vertex.
using Rotations = std::vector<std::vector<VertexId>>;

enum class Connectivity { RequireConnected, AllowDisconnected };

/// Degree and face-incidence counts of a single vertex.
///
/// `n3..n5` count neighbors by degree; `m3`, `m4`, `m5plus` count distinct
/// incident faces by length.
struct VertexMetrics {
    int degree = 0;
    int n3 = 0;
    int n4 = 0;
    int n5 = 0;
    int m3 = 0;
    int m4 = 0;
    int m5plus = 0;
    int incident_faces = 0;
    std::vector<VertexId> second_neighborhood;  // N2(v), sorted, excludes v
    int d2 = 0;
};

/// A connected (or, for reducer intermediates, possibly disconnected)
/// simple graph embedded in the sphere by a rotation system.
///
/// Faces are traced once at construction: the successor of dart (u->v) is
/// (v->w) where w immediately follows u in the clockwise rotation at v.
/// Construction verifies symmetry, simplicity and the genus-0 Euler count
/// (per component V - E + F = 2, an isolated vertex owning one empty face).
/// Instances are immutable.
class PlaneGraph {
public:
    PlaneGraph() : PlaneGraph(from_rotations(Rotations{{}})) {}

    static PlaneGraph from_rotations(Rotations rotations,
                                     Connectivity connectivity = Connectivity::RequireConnected);

    std::size_t vertex_count() const noexcept { return rotations_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t face_count() const noexcept { return faces_.size(); }
    std::size_t component_count() const noexcept { return component_count_; }

    const Rotations& rotations() const noexcept { return rotations_; }
    std::span<const VertexId> rotation(VertexId v) const;
    int degree(VertexId v) const;
    int max_degree() const noexcept { return max_degree_; }
    int min_degree() const noexcept { return min_degree_; }

    bool has_edge(VertexId u, VertexId v) const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    const std::vector<Face>& faces() const noexcept { return faces_; }
    const Face& face(FaceId f) const { return faces_.at(f); }

    /// Face containing dart (u -> v). Throws UnknownVertex if uv is not an edge.
    FaceId face_of_dart(VertexId u, VertexId v) const;

    /// Face in the corner of v between rotation[i] and rotation[i+1]
    /// (the face walking rotation[i] -> v -> rotation[i+1]).
    FaceId corner_face(VertexId v, std::size_t i) const;

    /// Distinct faces incident to v, in corner order.
    std::vector<FaceId> faces_at(VertexId v) const;

    /// Both faces on the sides of edge uv (equal when uv is a bridge).
    std::pair<FaceId, FaceId> faces_of_edge(VertexId u, VertexId v) const;

    /// True iff both sides of uv are 3-faces and they are different faces.
    bool edge_in_two_triangles(VertexId u, VertexId v) const;

    /// Distinct vertices on the boundary of f.
    std::vector<VertexId> face_vertices(FaceId f) const;

    VertexMetrics metrics(VertexId v) const;
    std::vector<VertexId> second_neighborhood(VertexId v) const;
    int d2(VertexId v) const;

    /// BFS distance; nullopt when u and v lie in different components.
    std::optional<std::size_t> distance(VertexId u, VertexId v) const;

    /// Connected components as vertex lists (ascending), ordered by smallest vertex.
    std::vector<std::vector<VertexId>> components() const;

    /// Induced subgraph on `vertices` (which must be a union of components),
    /// renumbered in the given order.
    PlaneGraph subgraph(std::span<const VertexId> vertices) const;

    /// Length of a shortest cycle, or nullopt for forests.
    std::optional<std::size_t> girth() const;

    void check_vertex(VertexId v) const;

private:
    PlaneGraph(Rotations rotations, Connectivity connectivity, int);

    DartId dart_id(VertexId u, VertexId v) const;

    Rotations rotations_;
    std::vector<DartId> offset_;      // first dart of each vertex
    std::vector<DartId> reverse_;     // dart -> reverse dart
    std::vector<VertexId> dart_head_; // dart -> head vertex
    std::vector<FaceId> dart_face_;
    std::vector<Face> faces_;
    std::vector<std::pair<VertexId, FaceId>> isolated_faces_;
    std::size_t edge_count_ = 0;
    std::size_t component_count_ = 0;
    int max_degree_ = 0;
    int min_degree_ = 0;
};

/// Parse the line-oriented rotation format (`n m` header, then `v: u1 u2 ...`).
PlaneGraph from_rotation_text(std::string_view text);

/// Serialize in the rotation format; parse(to_rotation_text(g)) reproduces g.
std::string to_rotation_text(const PlaneGraph& g);

}  // namespace twodist
