#include "twodist/configurations.hpp"

#include <algorithm>
#include <stdexcept>

#include "twodist/error.hpp"

namespace twodist {

std::string_view role_name(Role r) noexcept {
    switch (r) {
        case Role::V: return "v";
        case Role::V1: return "v1";
        case Role::V2: return "v2";
        case Role::V3: return "v3";
        case Role::V4: return "v4";
        case Role::V5: return "v5";
        case Role::X: return "x";
        case Role::Y: return "y";
    }
    return "?";
}

std::string_view to_string(SpecialKind k) noexcept {
    switch (k) {
        case SpecialKind::Bad: return "Bad";
        case SpecialKind::SemiBad: return "SemiBad";
        case SpecialKind::Strong: return "Strong";
        case SpecialKind::Good: return "Good";
        case SpecialKind::Support: return "Support";
    }
    return "?";
}

std::optional<SpecialKind> base_special_kind(const PlaneGraph& g, VertexId v) {
    if (g.degree(v) != 5) return std::nullopt;
    const auto fs = g.faces_at(v);
    int tris = 0;
    std::size_t other = 0;
    for (FaceId f : fs) {
        const auto len = g.face(f).length();
        if (len == 3) ++tris;
        else other = len;
    }
    if (tris != 4 || fs.size() != 5) return std::nullopt;
    if (other == 4) return SpecialKind::Bad;
    if (other >= 5) return SpecialKind::SemiBad;
    return std::nullopt;
}

// ---- LocalView ----

LocalView::LocalView(const PlaneGraph& g, VertexId center, std::size_t offset, bool mirrored)
    : g_(&g), center_(center), offset_(offset), mirrored_(mirrored), deg_(g.rotation(center).size()) {
    for (VertexId u : g.rotation(center)) {
        const int du = g.degree(u);
        if (du == 3) ++n3_;
        else if (du == 4) ++n4_;
        else if (du == 5) ++n5_;
    }
    for (FaceId f : g.faces_at(center)) {
        const auto len = g.face(f).length();
        if (len == 3) ++m3_;
        else if (len == 4) ++m4_;
        else if (len >= 5) ++m5plus_;
    }
}

std::size_t LocalView::pos(int i) const {
    const auto d = static_cast<long>(deg_);
    const long step = ((static_cast<long>(i) - 1) % d + d) % d;
    const long s = static_cast<long>(offset_);
    return static_cast<std::size_t>(mirrored_ ? ((s - step) % d + d) % d : (s + step) % d);
}

VertexId LocalView::at(int i) const { return g_->rotation(center_)[pos(i)]; }

int LocalView::deg(int i) const { return g_->degree(at(i)); }

int LocalView::corner(int i) const {
    // Clockwise the corner after v_i starts at pos(i); mirrored it ends there.
    const std::size_t p = mirrored_ ? pos(i + 1) : pos(i);
    return static_cast<int>(g_->face(g_->corner_face(center_, p)).length());
}

bool LocalView::edge_twice3(int i) const { return g_->edge_in_two_triangles(at(i), at(i + 1)); }

int LocalView::count_twice3(int first, int last) const {
    int n = 0;
    for (int i = first; i <= last; ++i) n += edge_twice3(i) ? 1 : 0;
    return n;
}

std::optional<SpecialKind> LocalView::base_kind(int i) const { return base_special_kind(*g_, at(i)); }

bool LocalView::strong_here() const {
    return d() == 5 && m3_ == 3 && tri(1) && tri(2) && tri(4) && bad_or_semibad(2) && m5plus_ >= 1;
}

bool LocalView::good_here() const {
    return d() == 5 && m3_ == 3 && tri(1) && tri(2) && tri(3) && semibad(2) && edge_twice3(1) && edge_twice3(2);
}

bool LocalView::support_here() const {
    return d() == 5 && m3_ == 2 && tri(1) && tri(2) && bad_or_semibad(2);
}

std::vector<VertexId> LocalView::rotation_from(int i, VertexId start) const {
    const auto r = g_->rotation(at(i));
    std::vector<VertexId> out(r.begin(), r.end());
    if (mirrored_) std::reverse(out.begin(), out.end());
    const auto it = std::find(out.begin(), out.end(), start);
    if (it == out.end()) return {};
    std::rotate(out.begin(), it, out.end());
    return out;
}

// ---- Binding / ConfigMatch ----

VertexId Binding::operator[](Role r) const {
    const auto& v = vertex[static_cast<std::size_t>(r)];
    if (!v) throw std::out_of_range("binding has no vertex for role " + std::string(role_name(r)));
    return *v;
}

std::vector<Edge> ConfigMatch::chords() const {
    std::vector<Edge> out;
    out.reserve(rule->add_edges.size());
    for (auto [a, b] : rule->add_edges) out.emplace_back(binding[a], binding[b]);
    return out;
}

// ---- rule table ----

namespace {

using enum Role;
using View = LocalView;

bool all_tri(const View& L, int first, int last) {
    for (int i = first; i <= last; ++i)
        if (!L.tri(i)) return false;
    return true;
}

int low_neighbors(const View& L) { return L.d() - L.n5(); }

bool bad_here(const View& L) { return L.d() == 5 && L.m3() == 4 && all_tri(L, 1, 4) && L.corner(5) == 4; }
bool semibad_here(const View& L) { return L.d() == 5 && L.m3() == 4 && all_tri(L, 1, 4) && L.corner(5) >= 5; }

// (4,5,5) triangle at a 4-vertex with one 3-face and a 4-neighbor v3.
bool four55_n4(const View& L) {
    return L.tri(1) && L.deg(1) == 5 && L.deg(2) == 5 && L.m3() == 1 && L.m5plus() <= 1 && L.deg(3) == 4;
}

bool t4n_b(const View& L) {
    return L.n3() == 1 && L.m3() == 2 && L.deg(5) == 3 && L.n4() >= 1 && L.m5plus() == 0;
}

bool support_b(const View& L) {
    return L.support_here() && L.n3() == 1 && L.n4() == 1 && L.deg(5) == 3 && L.m5plus() == 1 && L.m4() == 2;
}

ReductionRule rule(std::string id, std::string anchor, int degree, std::vector<RoleEdge> edges, int bound,
                   std::function<bool(const View&)> pattern) {
    ReductionRule r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.center_degree = degree;
    r.add_edges = std::move(edges);
    r.claimed_d2_bound = bound;
    r.pattern = std::move(pattern);
    return r;
}

std::vector<ReductionRule> build_table() {
    std::vector<ReductionRule> t;

    t.push_back(rule("R-δ1", "minimum degree at least 3 (1-vertex)", 1, {}, 15, [](const View&) { return true; }));
    t.push_back(rule("R-δ2", "minimum degree at least 3 (2-vertex)", 2, {{V1, V2}}, 10,
                     [](const View&) { return true; }));

    // 3-vertices
    t.push_back(rule("R-3adj4", "3-vertex with a 4- neighbour", 3, {{V1, V2}, {V1, V3}}, 14,
                     [](const View& L) { return L.deg(1) <= 4; }));
    t.push_back(rule("R-3in3f", "3-vertex on a 3-face", 3, {{V2, V3}}, 13, [](const View& L) { return L.tri(1); }));
    t.push_back(rule("R-3two4f", "3-vertex on two 4-faces", 3, {{V1, V3}}, 13,
                     [](const View& L) { return L.corner(1) == 4 && L.corner(2) == 4; }));

    // 4-vertices
    t.push_back(rule("R-4three3f", "4-vertex on three 3-faces", 4, {{V1, V4}}, 14,
                     [](const View& L) { return all_tri(L, 1, 3); }));
    t.push_back(rule("R-4m3-4f-adj", "4-vertex, two adjacent 3-faces and a 4-face", 4, {{V1, V4}}, 15,
                     [](const View& L) { return L.m3() == 2 && L.tri(2) && L.tri(3) && L.corner(1) == 4; }));
    t.push_back(rule("R-4m3-4f-nonadj", "4-vertex, two opposite 3-faces and a 4-face", 4, {{V3, V4}}, 15,
                     [](const View& L) { return L.m3() == 2 && L.tri(2) && L.tri(4) && L.corner(1) == 4; }));
    t.push_back(rule("R-4m3-n4-adj", "4-vertex, two adjacent 3-faces and a 4- neighbour", 4, {{V2, V4}}, 15,
                     [](const View& L) { return L.m3() == 2 && L.tri(1) && L.tri(2) && low_neighbors(L) >= 1; }));
    t.push_back(rule("R-4m3-n4-nonadj", "4-vertex, two opposite 3-faces and a 4- neighbour", 4,
                     {{V2, V3}, {V1, V4}}, 15,
                     [](const View& L) { return L.m3() == 2 && L.tri(1) && L.tri(3) && low_neighbors(L) >= 1; }));
    t.push_back(rule("R-4comm-m1", "4-vertex, 3-face next to a 5+-face, shared edge in two 3-faces", 4,
                     {{V1, V4}, {V2, V3}}, 15, [](const View& L) {
                         return L.m4() == 2 && L.n5() == 4 && L.tri(1) && L.corner(4) >= 5 && L.edge_twice3(1);
                     }));
    t.push_back(rule("R-4comm-adj", "4-vertex, adjacent 3-faces, edge in two 3-faces", 4, {{V2, V4}}, 15,
                     [](const View& L) {
                         return L.m3() == 2 && L.tri(1) && L.tri(2) && (L.edge_twice3(1) || L.edge_twice3(2));
                     }));
    t.push_back(rule("R-4comm-nonadj", "4-vertex, opposite 3-faces, edge in two 3-faces", 4, {{V1, V4}, {V2, V3}},
                     15, [](const View& L) {
                         return L.m3() == 2 && L.tri(1) && L.tri(3) && (L.edge_twice3(1) || L.edge_twice3(3));
                     }));
    t.push_back(rule("R-444", "4-vertex on a (4,4,4+)-face", 4, {{V1, V3}, {V1, V4}}, 15, [](const View& L) {
        return L.tri(1) && L.deg(1) == 4 && L.deg(2) >= 4 && L.m5plus() <= 1;
    }));
    t.push_back(rule("R-455", "4-vertex on a (4,5,5)-face", 4, {{V1, V4}, {V2, V3}}, 15, [](const View& L) {
        return L.tri(1) && L.deg(1) == 5 && L.deg(2) == 5 && L.m5plus() == 0;
    }));
    t.push_back(rule("R-455n4-adj", "4-vertex on a (4,5,5)-face with a 4-neighbour, adjacent 4-faces", 4,
                     {{V2, V3}, {V1, V4}}, 15, [](const View& L) {
                         return four55_n4(L) && ((L.corner(2) == 4 && L.corner(3) == 4) ||
                                                 (L.corner(3) == 4 && L.corner(4) == 4));
                     }));
    t.push_back(rule("R-455n4-nonadj", "4-vertex on a (4,5,5)-face with a 4-neighbour, opposite 4-faces", 4,
                     {{V2, V3}, {V3, V4}}, 15,
                     [](const View& L) { return four55_n4(L) && L.corner(2) == 4 && L.corner(4) == 4; }));

    // 5-vertices
    t.push_back(rule("R-5m5", "5-vertex on five 3-faces", 5, {}, 15, [](const View& L) { return L.m3() == 5; }));
    t.push_back(rule("R-5n5", "5-vertex with five 3-neighbours", 5, {{V1, V2}, {V2, V3}, {V3, V4}, {V4, V5}, {V5, V1}},
                     15, [](const View& L) { return L.n3() == 5; }));
    t.push_back(rule("R-5two4", "5-vertex, m3 = n3 = 2, two 4-neighbours", 5, {{V3, V4}, {V4, V5}, {V5, V1}}, 15,
                     [](const View& L) {
                         return L.m3() == 2 && L.n3() == 2 && L.tri(1) && L.tri(2) && L.n4() >= 2;
                     }));
    t.push_back(rule("R-5t4n-a-adj", "5-vertex, one 3-neighbour, m3 = 2 adjacent, four 4-neighbours", 5,
                     {{V3, V4}, {V4, V5}, {V1, V5}}, 15, [](const View& L) {
                         return L.n3() == 1 && L.m3() == 2 && L.tri(1) && L.tri(2) && L.deg(5) == 3 && L.n4() == 4;
                     }));
    t.push_back(rule("R-5t4n-a-nonadj", "5-vertex, one 3-neighbour, m3 = 2 apart, four 4-neighbours", 5,
                     {{V2, V3}, {V4, V5}, {V1, V5}}, 15, [](const View& L) {
                         return L.n3() == 1 && L.m3() == 2 && L.tri(1) && L.tri(3) && L.deg(5) == 3 && L.n4() == 4;
                     }));
    t.push_back(rule("R-5t4n-b-adj", "5-vertex, one 3-neighbour, m3 = 2 adjacent, 4-neighbour, no 5+-face", 5,
                     {{V5, V2}, {V5, V3}, {V1, V4}}, 15,
                     [](const View& L) { return t4n_b(L) && L.tri(1) && L.tri(2); }));
    t.push_back(rule("R-5t4n-b-nonadj", "5-vertex, one 3-neighbour, m3 = 2 apart, 4-neighbour, no 5+-face", 5,
                     {{V2, V3}, {V4, V5}, {V1, V5}}, 15,
                     [](const View& L) { return t4n_b(L) && L.tri(1) && L.tri(3); }));
    t.push_back(rule("R-5t4n-c", "5-vertex, one 3-neighbour, m3 = 3, two 4-neighbours or no 5+-face", 5,
                     {{V4, V5}, {V5, V1}}, 15, [](const View& L) {
                         return L.n3() == 1 && L.m3() == 3 && all_tri(L, 1, 3) && L.deg(5) == 3 &&
                                (L.n4() >= 2 || L.m5plus() == 0);
                     }));
    t.push_back(rule("R-5t4n-d", "5-vertex, one 3-neighbour, m3 = 3, 4-neighbour, one 5+-face", 5,
                     {{V4, V5}, {V5, V1}}, 15, [](const View& L) {
                         return L.n3() == 1 && L.m3() == 3 && all_tri(L, 1, 3) && L.deg(5) == 3 && L.n4() >= 1 &&
                                L.m5plus() <= 1;
                     }));
    t.push_back(rule("R-5n30-a-adj", "5-vertex, 4-neighbours only, adjacent 3-faces, a 4-face", 5,
                     {{V3, V4}, {V4, V5}, {V5, V1}}, 15, [](const View& L) {
                         return L.n3() == 0 && L.m3() == 2 && L.n4() == 5 && L.tri(1) && L.tri(2) && L.m4() >= 1;
                     }));
    t.push_back(rule("R-5n30-a-nonadj", "5-vertex, 4-neighbours only, separated 3-faces, a 4-face", 5,
                     {{V2, V3}, {V4, V5}, {V5, V1}}, 15, [](const View& L) {
                         return L.n3() == 0 && L.m3() == 2 && L.n4() == 5 && L.tri(1) && L.tri(3) && L.m4() >= 1;
                     }));
    t.push_back(rule("R-5n30-b-split", "5-vertex, m3 = 3, four 4-neighbours, split 3-faces", 5, {{V3, V4}, {V5, V1}},
                     15, [](const View& L) {
                         return L.n3() == 0 && L.m3() == 3 && L.n4() >= 4 && L.tri(1) && L.tri(2) && L.tri(4);
                     }));
    t.push_back(rule("R-5n30-b-run", "5-vertex, m3 = 3, four 4-neighbours, consecutive 3-faces", 5,
                     {{V2, V5}, {V2, V4}}, 15, [](const View& L) {
                         return L.n3() == 0 && L.m3() == 3 && L.n4() >= 4 && all_tri(L, 1, 3) && L.deg(2) == 4;
                     }));

    auto m34 = [](const View& L) { return L.n3() == 0 && L.m3() == 4 && all_tri(L, 1, 4); };
    t.push_back(rule("R-5m34-a", "5-vertex, n3 = 0, m3 = 4, two 4-neighbours", 5, {{V5, V1}}, 15,
                     [m34](const View& L) { return m34(L) && L.n4() >= 2; }));
    t.push_back(rule("R-5m34-b", "5-vertex, n3 = 0, m3 = 4, 4-neighbour and 4-face", 5, {{V5, V1}}, 15,
                     [m34](const View& L) { return m34(L) && L.n4() >= 1 && L.corner(5) == 4; }));
    t.push_back(rule("R-5m34-c", "5-vertex, n3 = 0, m3 = 4, 4-face and edge in two 3-faces", 5, {{V5, V1}}, 15,
                     [m34](const View& L) { return m34(L) && L.corner(5) == 4 && L.count_twice3(1, 4) >= 1; }));
    t.push_back(rule("R-5m34-d", "5-vertex, n3 = 0, m3 = 4, 5+-face and two edges in two 3-faces", 5, {{V5, V1}},
                     15, [m34](const View& L) { return m34(L) && L.corner(5) >= 5 && L.count_twice3(1, 4) >= 2; }));
    t.push_back(rule("R-5m34-e", "5-vertex, n3 = 0, m3 = 4, 5+-face, edge in two 3-faces, 4-neighbour", 5,
                     {{V5, V1}}, 15, [m34](const View& L) {
                         return m34(L) && L.corner(5) >= 5 && L.count_twice3(1, 4) >= 1 && L.n4() >= 1;
                     }));

    t.push_back(rule("R-sb-a1", "bad vertex with a 4-neighbour", 5, {{V5, V1}}, 15,
                     [](const View& L) { return bad_here(L) && L.n4() >= 1; }));
    t.push_back(rule("R-sb-a2", "bad vertex with an edge in two 3-faces", 5, {{V5, V1}}, 15,
                     [](const View& L) { return bad_here(L) && L.count_twice3(1, 4) >= 1; }));
    t.push_back(rule("R-sb-b", "semi-bad vertex with a 3-neighbour or two 4-neighbours", 5, {{V5, V1}}, 15,
                     [](const View& L) { return semibad_here(L) && (L.n3() >= 1 || L.n4() >= 2); }));

    {
        auto r = rule("R-deg-a2", "bad or semi-bad vertex with 4-neighbour v2", 5, {{V1, X}, {X, V3}}, 15,
                      [](const View& L) { return L.m3() == 4 && all_tri(L, 1, 4) && L.deg(2) == 4; });
        r.deleted = V2;
        r.aux = AuxKind::FourthNeighborOfV2;
        t.push_back(std::move(r));
    }
    {
        auto r = rule("R-deg-a3", "bad or semi-bad vertex with 4-neighbour v3", 5, {{V2, X}, {X, V4}}, 15,
                      [](const View& L) { return L.m3() == 4 && all_tri(L, 1, 4) && L.deg(3) == 4; });
        r.deleted = V3;
        r.aux = AuxKind::FourthNeighborOfV3;
        t.push_back(std::move(r));
    }
    {
        auto r = rule("R-deg-b", "bad or semi-bad vertex whose middle neighbour has only 4- faces", 5,
                      {{V2, X}, {Y, V4}}, 15, [](const View& L) {
                          if (L.m3() != 4 || !all_tri(L, 1, 4) || L.deg(3) != 5) return false;
                          const auto around = L.rotation_from(3, L.at(4));
                          if (around.size() != 5 || around[1] != L.center() || around[2] != L.at(2)) return false;
                          const PlaneGraph& g = L.graph();
                          const VertexId v3 = L.at(3);
                          const auto m = g.metrics(v3);
                          if (m.m3 != 3 || m.m5plus != 0) return false;
                          // corner x -> v3 -> y, read in this labeling's direction
                          const VertexId x = around[3], y = around[4];
                          const FaceId f = L.mirrored() ? g.face_of_dart(v3, x) : g.face_of_dart(v3, y);
                          return g.has_edge(x, y) && g.face(f).length() == 3;
                      });
        r.deleted = V3;
        r.aux = AuxKind::OuterPairOfV3;
        t.push_back(std::move(r));
    }

    t.push_back(rule("R-strong-a", "strong vertex with two 4-neighbours", 5, {{V3, V4}, {V1, V5}}, 15,
                     [](const View& L) { return L.strong_here() && L.n4() >= 2 && L.m5plus() <= 1; }));
    t.push_back(rule("R-strong-b", "strong vertex, v2 shares two neighbours with v1 and v3", 5, {{V3, V4}, {V1, V5}},
                     15, [](const View& L) {
                         return L.strong_here() && L.edge_twice3(1) && L.edge_twice3(2) && L.n4() >= 1 &&
                                L.m4() >= 1;
                     }));
    t.push_back(rule("R-goodtwo", "good vertex with v2 and v3 semi-bad", 5, {{V1, V5}, {V4, V5}}, 15,
                     [](const View& L) {
                         return L.good_here() && L.n4() == 1 && L.m5plus() == 2 && L.semibad(3);
                     }));
    t.push_back(rule("R-good-a", "good vertex with a 3-neighbour", 5, {{V4, V5}, {V5, V1}}, 15,
                     [](const View& L) { return L.good_here() && L.deg(5) == 3; }));
    t.push_back(rule("R-good-b", "good vertex with two 4-neighbours", 5, {{V1, V5}, {V4, V5}}, 15,
                     [](const View& L) { return L.good_here() && L.n4() >= 2; }));
    t.push_back(rule("R-good-c", "good vertex on two 4-faces", 5, {{V1, V4}, {V3, V5}}, 15,
                     [](const View& L) { return L.good_here() && L.corner(4) == 4 && L.corner(5) == 4; }));
    t.push_back(rule("R-good-d", "good vertex with a 4-neighbour and a 4-face", 5, {{V1, V4}, {V2, V5}}, 15,
                     [](const View& L) {
                         return L.good_here() && L.n4() >= 1 && L.m5plus() <= 1 && L.corner(4) == 4;
                     }));
    t.push_back(rule("R-good-e", "good vertex with v3 semi-bad and a 4-face", 5, {{V1, V4}, {V2, V5}}, 15,
                     [](const View& L) {
                         return L.good_here() && L.semibad(3) && L.m5plus() <= 1 && L.corner(4) == 4;
                     }));

    t.push_back(rule("R-supp-a", "support vertex with a 3-neighbour and no 5+-face", 5, {{V3, V5}, {V2, V4}}, 15,
                     [](const View& L) {
                         return L.support_here() && L.n3() == 1 && L.corner(3) == 4 && L.corner(4) == 4 &&
                                L.corner(5) == 4;
                     }));
    t.push_back(rule("R-supp-b1", "support vertex, 3- and 4-neighbour, two 4-faces", 5,
                     {{V2, V4}, {V3, V5}, {V1, V5}}, 15,
                     [](const View& L) { return support_b(L) && L.corner(3) >= 5; }));
    t.push_back(rule("R-supp-b2", "support vertex, 3- and 4-neighbour, two 4-faces", 5,
                     {{V1, V5}, {V2, V5}, {V4, V5}}, 15,
                     [](const View& L) { return support_b(L) && (L.corner(4) >= 5 || L.corner(5) >= 5); }));
    t.push_back(rule("R-supp-c", "support vertex, 3-neighbour and two 4-neighbours", 5,
                     {{V3, V4}, {V4, V5}, {V5, V1}}, 15, [](const View& L) {
                         return L.support_here() && L.n3() == 1 && L.n4() == 2 && L.deg(5) == 3 && L.deg(3) == 4 &&
                                L.deg(4) == 4 && L.m4() >= 1;
                     }));
    t.push_back(rule("R-supp-d", "support vertex with two 3-neighbours and a 4-face", 5,
                     {{V3, V4}, {V4, V5}, {V5, V1}}, 15, [](const View& L) {
                         return L.support_here() && L.n3() == 2 && L.deg(4) == 3 && L.deg(5) == 3 && L.m4() >= 1;
                     }));

    std::stable_sort(t.begin(), t.end(), [](const ReductionRule& a, const ReductionRule& b) {
        return a.claimed_d2_bound < b.claimed_d2_bound;
    });
    return t;
}

// Fill auxiliary roles; false if the local structure does not provide them.
bool bind_aux(const ReductionRule& r, const View& L, Binding& b) {
    const PlaneGraph& g = L.graph();
    auto fourth = [&](int i) -> std::optional<VertexId> {
        const VertexId vi = L.at(i);
        if (g.degree(vi) != 4) return std::nullopt;
        for (VertexId u : g.rotation(vi))
            if (u != L.center() && u != L.at(i - 1) && u != L.at(i + 1)) return u;
        return std::nullopt;
    };
    switch (r.aux) {
        case AuxKind::None: return true;
        case AuxKind::FourthNeighborOfV2:
        case AuxKind::FourthNeighborOfV3: {
            const auto x = fourth(r.aux == AuxKind::FourthNeighborOfV2 ? 2 : 3);
            if (!x) return false;
            b.set(X, *x);
            return true;
        }
        case AuxKind::OuterPairOfV3: {
            const auto around = L.rotation_from(3, L.at(4));
            if (around.size() != 5) return false;
            b.set(X, around[3]);
            b.set(Y, around[4]);
            return true;
        }
    }
    return false;
}

Binding make_binding(const View& L) {
    Binding b;
    b.offset = L.offset();
    b.mirrored = L.mirrored();
    b.set(V, L.center());
    const Role roles[] = {V1, V2, V3, V4, V5};
    for (int i = 1; i <= L.d() && i <= 5; ++i) b.set(roles[i - 1], L.at(i));
    return b;
}

// Labelings of each vertex, built on first use.
class ViewCache {
public:
    explicit ViewCache(const PlaneGraph& g) : g_(g), by_vertex_(g.vertex_count()) {}

    const std::vector<View>& at(VertexId v) {
        auto& slot = by_vertex_[v];
        if (!slot) {
            slot.emplace();
            const std::size_t d = g_.rotation(v).size();
            for (std::size_t s = 0; s < d; ++s) {
                slot->emplace_back(g_, v, s, false);
                if (d > 2) slot->emplace_back(g_, v, s, true);
            }
        }
        return *slot;
    }
    std::size_t size() const { return by_vertex_.size(); }

private:
    const PlaneGraph& g_;
    std::vector<std::optional<std::vector<View>>> by_vertex_;
};

// Visit pattern hits in priority order; stop when `visit` returns true.
template <class Visit>
void scan(const PlaneGraph& g, Visit&& visit) {
    ViewCache cache(g);
    for (const ReductionRule& r : rule_table()) {
        for (VertexId v = 0; v < cache.size(); ++v) {
            if (g.degree(v) != r.center_degree) continue;
            for (const View& L : cache.at(v)) {
                if (!r.pattern(L)) continue;
                ConfigMatch m;
                m.rule = &r;
                m.binding = make_binding(L);
                if (!bind_aux(r, L, m.binding)) continue;
                m.observed_d2 = g.d2(m.deleted_vertex());
                if (visit(std::move(m))) return;
            }
        }
    }
}

}  // namespace

const std::vector<ReductionRule>& rule_table() {
    static const std::vector<ReductionRule> table = build_table();
    return table;
}

const ReductionRule& rule_by_id(std::string_view id) {
    for (const auto& r : rule_table())
        if (r.id == id) return r;
    throw std::out_of_range("unknown rule " + std::string(id));
}

bool verify_claimed_bound(const PlaneGraph& g, const ConfigMatch& m) {
    return g.d2(m.deleted_vertex()) <= m.rule->claimed_d2_bound;
}

SurgeryStatus check_reduction(const PlaneGraph& g, const ConfigMatch& m, bool* proper) {
    const VertexId z = m.deleted_vertex();
    const auto chords = m.chords();
    const Surgery s = delete_and_join(g, z, chords);
    if (proper) *proper = s.status == SurgeryStatus::Ok && neighbors_stay_close(g, z, s);
    return s.status;
}

std::optional<ConfigMatch> detect(const PlaneGraph& g, DetectStats* stats) {
    if (g.max_degree() > kMaxDegree)
        throw Error(ErrorCode::DegreeTooHigh, "maximum degree " + std::to_string(g.max_degree()) + " exceeds 5");
    DetectStats local;
    DetectStats& st = stats ? *stats : local;
    std::optional<ConfigMatch> found;
    scan(g, [&](ConfigMatch m) {
        ++st.pattern_hits;
        if (m.observed_d2 > m.rule->claimed_d2_bound) {
            ++st.rejected_bound;
            return false;
        }
        bool proper = false;
        switch (check_reduction(g, m, &proper)) {
            case SurgeryStatus::Ok: break;
            case SurgeryStatus::DegreeOverflow: ++st.rejected_degree; return false;
            default: ++st.rejected_embedding; return false;
        }
        if (!proper) {
            ++st.rejected_proper;
            return false;
        }
        found = std::move(m);
        return true;
    });
    return found;
}

std::vector<ConfigMatch> all_pattern_matches(const PlaneGraph& g) {
    std::vector<ConfigMatch> out;
    scan(g, [&](ConfigMatch m) {
        out.push_back(std::move(m));
        return false;
    });
    return out;
}

// ---- special vertices ----

std::optional<SpecialVertex> classify_special(const PlaneGraph& g, VertexId v) {
    g.check_vertex(v);
    if (g.degree(v) != 5) return std::nullopt;
    auto witness = [&](SpecialKind kind, const View& L, bool hub) {
        SpecialVertex s;
        s.kind = kind;
        for (int i = 1; i <= 5; ++i) s.neighbors[i - 1] = L.at(i);
        s.offset = L.offset();
        s.mirrored = L.mirrored();
        if (hub) s.hub = L.at(2);
        return s;
    };
    std::vector<View> views;
    for (std::size_t s = 0; s < 5; ++s)
        for (bool mirrored : {false, true}) views.emplace_back(g, v, s, mirrored);

    if (base_special_kind(g, v)) {
        for (const View& L : views) {
            if (!L.mirrored() && all_tri(L, 1, 4)) return witness(*base_special_kind(g, v), L, false);
        }
    }
    for (const View& L : views)
        if (L.strong_here()) return witness(SpecialKind::Strong, L, true);
    for (const View& L : views)
        if (L.good_here()) return witness(SpecialKind::Good, L, true);
    for (const View& L : views)
        if (L.support_here()) return witness(SpecialKind::Support, L, true);
    return std::nullopt;
}

}  // namespace twodist
