#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twodist/plane_graph.hpp"
#include "twodist/surgery.hpp"

namespace twodist {

/// Named positions in a configuration: the center v, its neighbors v1..v5
/// in rotation order, and up to two auxiliary vertices.
enum class Role : std::uint8_t { V, V1, V2, V3, V4, V5, X, Y };
inline constexpr std::size_t kRoleCount = 8;

std::string_view role_name(Role r) noexcept;

struct RoleEdge {
    Role a;
    Role b;
};

enum class SpecialKind { Bad, SemiBad, Strong, Good, Support };

std::string_view to_string(SpecialKind k) noexcept;

/// Neighbors of `center` read from rotation position `offset`, clockwise or
/// (mirrored) counterclockwise. Labels are 1-based and cyclic.
class LocalView {
public:
    LocalView(const PlaneGraph& g, VertexId center, std::size_t offset, bool mirrored);

    const PlaneGraph& graph() const noexcept { return *g_; }
    VertexId center() const noexcept { return center_; }
    std::size_t offset() const noexcept { return offset_; }
    bool mirrored() const noexcept { return mirrored_; }
    int d() const noexcept { return static_cast<int>(deg_); }

    VertexId at(int i) const;       // v_i
    int deg(int i) const;           // d(v_i)
    int corner(int i) const;        // length of the face at v between v_i and v_{i+1}
    bool tri(int i) const { return corner(i) == 3; }
    bool edge_twice3(int i) const;  // v_i v_{i+1} lies in two 3-faces
    int count_twice3(int first, int last) const;

    /// Bad / SemiBad status of v_i (local face data only).
    std::optional<SpecialKind> base_kind(int i) const;
    bool bad_or_semibad(int i) const { return base_kind(i).has_value(); }
    bool semibad(int i) const { return base_kind(i) == SpecialKind::SemiBad; }

    int n3() const noexcept { return n3_; }
    int n4() const noexcept { return n4_; }
    int n5() const noexcept { return n5_; }
    int m3() const noexcept { return m3_; }
    int m4() const noexcept { return m4_; }
    int m5plus() const noexcept { return m5plus_; }

    // Special-vertex shapes in this labeling.
    bool strong_here() const;
    bool good_here() const;
    bool support_here() const;

    /// Rotation of v_i read in this labeling's direction, starting at v_{i+1}.
    std::vector<VertexId> rotation_from(int i, VertexId start) const;

private:
    std::size_t pos(int i) const;

    const PlaneGraph* g_;
    VertexId center_;
    std::size_t offset_;
    bool mirrored_;
    std::size_t deg_;
    int n3_ = 0, n4_ = 0, n5_ = 0, m3_ = 0, m4_ = 0, m5plus_ = 0;
};

/// Role -> vertex assignment for one match.
struct Binding {
    std::array<std::optional<VertexId>, kRoleCount> vertex{};
    std::size_t offset = 0;
    bool mirrored = false;

    VertexId operator[](Role r) const;
    bool has(Role r) const { return vertex[static_cast<std::size_t>(r)].has_value(); }
    void set(Role r, VertexId v) { vertex[static_cast<std::size_t>(r)] = v; }
};

/// Auxiliary vertices some rules need besides v and its neighbors.
enum class AuxKind {
    None,
    FourthNeighborOfV2,  // x in N(v2) \ {v, v1, v3}
    FourthNeighborOfV3,  // x in N(v3) \ {v, v2, v4}
    OuterPairOfV3,       // v3's rotation reads v4, v, v2, x, y
};

/// One reducible configuration: a local pattern, the vertex to delete, the
/// edges to add among its former neighbors (each skipped if present), and
/// the bound on d2 of the deleted vertex that makes its color extendable.
struct ReductionRule {
    std::string id;
    std::string anchor;
    int center_degree = 0;
    Role deleted = Role::V;
    std::vector<RoleEdge> add_edges;
    int claimed_d2_bound = 15;
    AuxKind aux = AuxKind::None;
    std::function<bool(const LocalView&)> pattern;
};

/// Rules in detection priority: ascending claimed bound, then table order.
const std::vector<ReductionRule>& rule_table();
const ReductionRule& rule_by_id(std::string_view id);

struct ConfigMatch {
    const ReductionRule* rule = nullptr;
    Binding binding;
    int observed_d2 = 0;

    VertexId deleted_vertex() const { return binding[rule->deleted]; }
    std::vector<Edge> chords() const;
};

/// Why candidate pattern hits were passed over during detection.
struct DetectStats {
    std::size_t pattern_hits = 0;
    std::size_t rejected_bound = 0;
    std::size_t rejected_embedding = 0;
    std::size_t rejected_degree = 0;
    std::size_t rejected_proper = 0;
};

/// d2 of the deleted vertex is at most the rule's claimed bound.
bool verify_claimed_bound(const PlaneGraph& g, const ConfigMatch& m);

/// Dry-run the reduction: the result must be planar, keep max degree <= 5,
/// and keep every former-neighbor pair within distance 2.
SurgeryStatus check_reduction(const PlaneGraph& g, const ConfigMatch& m, bool* proper = nullptr);

/// First reducible configuration in priority order whose bound verifies and
/// whose reduction is admissible; nullopt if none exists.
/// Throws DegreeTooHigh if the maximum degree exceeds 5.
std::optional<ConfigMatch> detect(const PlaneGraph& g, DetectStats* stats = nullptr);

/// Every pattern hit of every rule (bound not checked), in priority order.
std::vector<ConfigMatch> all_pattern_matches(const PlaneGraph& g);

struct SpecialVertex {
    SpecialKind kind;
    std::array<VertexId, 5> neighbors{};  // witness labeling v1..v5
    std::size_t offset = 0;
    bool mirrored = false;
    std::optional<VertexId> hub;           // v2 for Strong / Good / Support
};

/// Bad / SemiBad / Strong / Good / Support classification of v.
std::optional<SpecialVertex> classify_special(const PlaneGraph& g, VertexId v);

/// Bad or SemiBad only (depends on v's own faces).
std::optional<SpecialKind> base_special_kind(const PlaneGraph& g, VertexId v);

}  // namespace twodist
