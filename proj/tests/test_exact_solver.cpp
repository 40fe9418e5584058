#include <doctest.h>

#include "oracles.hpp"
#include "twodist/exact_solver.hpp"
#include "twodist/generators.hpp"

using namespace twodist;

TEST_CASE("chi2 examples") {
    CHECK(chi2_exact(named("c5")).value == 5);
    CHECK(chi2_exact(named("c6")).value == 3);
    CHECK(chi2_exact(named("k4")).value == 4);
    CHECK(chi2_exact(named("star5")).value == 6);
    CHECK(chi2_exact(named("k2")).value == 2);
    CHECK(chi2_exact(named("k1")).value == 1);
}

TEST_CASE("icosahedron needs six colors") {
    // Its square is K12 minus the antipodal matching, so six antipodal
    // pairs sharing a color is optimal.
    const auto g = named("icosahedron");
    for (VertexId u = 0; u < 12; ++u) {
        int far = 0;
        for (VertexId v = 0; v < 12; ++v)
            if (g.distance(u, v) == 3u) ++far;
        CHECK(far == 1);
    }
    const auto r = chi2_exact(g);
    CHECK(r.value == 6);
    REQUIRE(r.witness);
    CHECK(validate(g, *r.witness).valid);
    CHECK(color_with_k(g, 5).status == SearchStatus::Infeasible);
}

TEST_CASE("witness is valid and uses exactly chi2 colors") {
    for (auto name : named_graphs()) {
        const auto g = named(name);
        if (g.vertex_count() > 14) continue;
        const auto r = chi2_exact(g);
        REQUIRE(r.value);
        REQUIRE(r.witness);
        CHECK(validate(g, *r.witness).valid);
        CHECK(r.witness->colors_used() == *r.value);
    }
}

TEST_CASE("property: chi2 agrees with plain enumeration") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        CAPTURE(seed);
        const auto rot = oracle::grid_graph(3 + static_cast<int>(seed % 2), 3, seed);
        const auto g = PlaneGraph::from_rotations(rot);
        CHECK(chi2_exact(g).value == oracle::brute_chi2(oracle::adjacency(rot)));
    }
    for (auto name : {"c5", "c6", "p3", "star5", "k4", "fig1a"}) {
        const auto g = named(name);
        CHECK(chi2_exact(g).value == oracle::brute_chi2(oracle::adjacency(g.rotations())));
    }
}

TEST_CASE("budget exhaustion gives unknown") {
    const auto g = named("dodecahedron");
    const auto r = color_with_k(g, 3, SearchBudget{5});
    CHECK(r.status == SearchStatus::Unknown);
    CHECK_FALSE(r.coloring);
    const auto c = chi2_exact(g, SearchBudget{5});
    CHECK_FALSE(c.value);
}

TEST_CASE("palette size is checked") {
    const auto g = named("c5");
    CHECK_THROWS_AS(color_with_k(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(color_with_k(g, 65), std::invalid_argument);
    CHECK(color_with_k(g, 4).status == SearchStatus::Infeasible);
}
