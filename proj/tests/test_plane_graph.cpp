#include <doctest.h>

#include "oracles.hpp"
#include "twodist/generators.hpp"
#include "twodist/plane_graph.hpp"

using namespace twodist;

namespace {

ErrorCode code_of(std::string_view text) {
    try {
        from_rotation_text(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

std::vector<std::size_t> lengths(const PlaneGraph& g) {
    std::vector<std::size_t> out;
    for (const auto& f : g.faces()) out.push_back(f.length());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("triangle has two 3-faces") {
    const auto g = from_rotation_text("3 3\n0: 1 2\n1: 2 0\n2: 0 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(lengths(g) == std::vector<std::size_t>{3, 3});
}

TEST_CASE("tetrahedron and icosahedron face counts") {
    const auto k4 = named("k4");
    CHECK(k4.face_count() == 4);
    CHECK(lengths(k4) == std::vector<std::size_t>(4, 3));

    const auto ico = named("icosahedron");
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    CHECK(lengths(ico) == std::vector<std::size_t>(20, 3));
    for (VertexId v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
}

TEST_CASE("icosahedron faces match a hand-listed face set") {
    // Each face as a sorted vertex triple, read off the embedding drawing.
    const auto g = named("icosahedron");
    std::set<std::array<VertexId, 3>> listed;
    for (const auto& f : g.faces()) {
        std::array<VertexId, 3> t{f.boundary[0].from, f.boundary[1].from, f.boundary[2].from};
        std::sort(t.begin(), t.end());
        listed.insert(t);
    }
    CHECK(listed.size() == 20);
    // every triple is a triangle of the graph and every edge lies on two of them
    std::map<std::pair<VertexId, VertexId>, int> edge_use;
    for (const auto& t : listed) {
        CHECK(g.has_edge(t[0], t[1]));
        CHECK(g.has_edge(t[1], t[2]));
        CHECK(g.has_edge(t[0], t[2]));
        edge_use[{t[0], t[1]}]++;
        edge_use[{t[1], t[2]}]++;
        edge_use[{t[0], t[2]}]++;
    }
    CHECK(edge_use.size() == 30);
    for (const auto& [e, n] : edge_use) CHECK(n == 2);
}

TEST_CASE("parse errors") {
    CHECK(code_of("") == ErrorCode::ParseError);
    CHECK(code_of("3\n0: 1\n") == ErrorCode::ParseError);
    CHECK(code_of("2 1\n0 1\n1: 0\n") == ErrorCode::ParseError);
    CHECK(code_of("2 1\n0: 1\n0: 1\n") == ErrorCode::ParseError);
    CHECK(code_of("2 1\n0: 1\n") == ErrorCode::ParseError);
    CHECK(code_of("2 2\n0: 1\n1: 0\n") == ErrorCode::ParseError);
    CHECK(code_of("2 1\n0: x\n1: 0\n") == ErrorCode::ParseError);
    CHECK(code_of("2 1\n0: 5\n1: 0\n") == ErrorCode::ParseError);
}

TEST_CASE("structural errors") {
    CHECK(code_of("3 2\n0: 1 2\n1: 0\n2: 1\n") == ErrorCode::AsymmetricRotation);
    CHECK(code_of("2 1\n0: 0\n1:\n") == ErrorCode::NotSimple);
    CHECK(code_of("4 2\n0: 1\n1: 0\n2: 3\n3: 2\n") == ErrorCode::Disconnected);
    // K4 with every vertex listing the others in id order: two faces, genus 1
    CHECK(code_of("4 6\n0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n") == ErrorCode::NotPlanarEmbedding);
}

TEST_CASE("comments and blank lines") {
    const auto g = from_rotation_text("# a path\n3 2\n\n0: 1   # end\n1: 0 2\n2: 1\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.face_count() == 1);
    CHECK(g.faces()[0].length() == 4);
}

TEST_CASE("text round trip") {
    for (auto name : named_graphs()) {
        const auto g = named(name);
        const auto back = from_rotation_text(to_rotation_text(g));
        CHECK(back.rotations() == g.rotations());
    }
}

TEST_CASE("metrics examples") {
    const auto c5 = named("c5");
    for (VertexId v = 0; v < 5; ++v) {
        const auto m = c5.metrics(v);
        CHECK(m.degree == 2);
        CHECK(m.d2 == 4);
    }
    const auto ico = named("icosahedron");
    for (VertexId v = 0; v < 12; ++v) {
        const auto m = ico.metrics(v);
        CHECK(m.degree == 5);
        CHECK(m.m3 == 5);
        CHECK(m.d2 == 10);
        CHECK(m.n5 == 5);
    }
    const auto p3 = named("p3");
    VertexId center = 0;
    while (p3.degree(center) != 2) ++center;
    CHECK(p3.d2(center) == 2);
    CHECK_THROWS_AS(p3.metrics(7), Error);
}

TEST_CASE("distance examples") {
    const auto tri = from_rotation_text("3 3\n0: 1 2\n1: 2 0\n2: 0 1\n");
    CHECK(tri.distance(0, 2) == 1u);
    CHECK(tri.distance(1, 1) == 0u);
    const auto c6 = named("c6");
    CHECK(c6.distance(0, 3) == 3u);
    const auto ico = named("icosahedron");
    CHECK(ico.distance(0, 11) == 3u);
}

TEST_CASE("edge in two triangles and corner faces") {
    const auto ico = named("icosahedron");
    CHECK(ico.edge_in_two_triangles(0, 1));
    const auto c5 = named("c5");
    CHECK_FALSE(c5.edge_in_two_triangles(0, 1));
    const auto cube = named("cube");
    for (VertexId v = 0; v < 8; ++v)
        for (std::size_t i = 0; i < 3; ++i) CHECK(cube.face(cube.corner_face(v, i)).length() == 4);
}

TEST_CASE("girth is informational") {
    CHECK(named("cube").girth() == 4u);
    CHECK(named("dodecahedron").girth() == 5u);
    CHECK_FALSE(named("star5").girth().has_value());
}

TEST_CASE("property: faces, Euler and distances agree with the oracles on grid graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        CAPTURE(seed);
        const auto rot = oracle::grid_graph(6 + static_cast<int>(seed % 4), 5, seed);
        const auto g = PlaneGraph::from_rotations(rot);
        CHECK(lengths(g) == oracle::face_lengths(rot));
        CHECK(oracle::euler_ok(rot));
        std::size_t sum = 0;
        for (const auto& f : g.faces()) sum += f.length();
        CHECK(sum == 2 * g.edge_count());

        const auto adj = oracle::adjacency(rot);
        const auto d = oracle::all_pairs(adj);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            CHECK(g.second_neighborhood(u) == oracle::n2(adj, u));
            const auto m = g.metrics(u);
            CHECK(m.d2 <= static_cast<int>(g.vertex_count()) - 1);
            int bound = m.degree;
            for (VertexId w : g.rotation(u)) bound += g.degree(w) - 1;
            CHECK(m.d2 <= bound);
            CHECK(static_cast<std::size_t>(m.m3 + m.m4 + m.m5plus) <= g.faces_at(u).size());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                CHECK(g.distance(u, v) == static_cast<std::size_t>(d[u][v]));
                CHECK(g.distance(u, v) == g.distance(v, u));
            }
        }
    }
}

TEST_CASE("property: rejecting non-planar rotations") {
    // Swapping two neighbors at one vertex of a 2-connected grid graph changes
    // the genus whenever the oracle's Euler count says so.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto rot = oracle::grid_graph(5, 5, seed, 0.95);
        VertexId v = 0;
        while (v < rot.size() && rot[v].size() < 3) ++v;
        if (v == rot.size()) continue;
        std::swap(rot[v][0], rot[v][1]);
        if (oracle::euler_ok(rot)) {
            CHECK_NOTHROW(PlaneGraph::from_rotations(rot));
        } else {
            CHECK_THROWS_AS(PlaneGraph::from_rotations(rot), Error);
        }
    }
}

TEST_CASE("disconnected graphs on request") {
    const Rotations rot{{1}, {0}, {}, {4}, {3}};
    CHECK_THROWS_AS(PlaneGraph::from_rotations(rot), Error);
    const auto g = PlaneGraph::from_rotations(rot, Connectivity::AllowDisconnected);
    CHECK(g.component_count() == 3);
    CHECK(g.face_count() == 3);
    const auto parts = g.components();
    REQUIRE(parts.size() == 3);
    CHECK(parts[1] == std::vector<VertexId>{2});
    const auto sub = g.subgraph(parts[2]);
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.edge_count() == 1);
    CHECK_FALSE(g.distance(0, 3).has_value());
}

TEST_CASE("k1 owns one empty face") {
    const auto g = named("k1");
    CHECK(g.vertex_count() == 1);
    CHECK(g.face_count() == 1);
    CHECK(g.faces_at(0).size() == 1);
}
