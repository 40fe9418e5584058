#include "twodist/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "twodist/error.hpp"

namespace twodist {

namespace {

struct NamedEntry {
    std::string_view name;
    std::string_view text;
};

// Same content as the files under corpus/.
constexpr NamedEntry kNamed[] = {
    {"k1", R"(1 0
0:
)"},
    {"k2", R"(2 1
0: 1
1: 0
)"},
    {"p3", R"(3 2
0: 1
1: 0 2
2: 1
)"},
    {"c5", R"(5 5
0: 4 1
1: 2 0
2: 3 1
3: 4 2
4: 0 3
)"},
    {"c6", R"(6 6
0: 5 1
1: 0 2
2: 3 1
3: 4 2
4: 5 3
5: 0 4
)"},
    {"star5", R"(6 5
0: 4 5 1 2 3
1: 0
2: 0
3: 0
4: 0
5: 0
)"},
    {"k4", R"(4 6
0: 3 2 1
1: 2 3 0
2: 3 1 0
3: 2 0 1
)"},
    {"cube", R"(8 12
0: 2 1 4
1: 0 3 5
2: 3 0 6
3: 1 2 7
4: 0 5 6
5: 1 7 4
6: 2 4 7
7: 3 6 5
)"},
    {"pentagonal_prism", R"(10 15
0: 1 4 5
1: 2 0 6
2: 7 3 1
3: 2 8 4
4: 3 9 0
5: 9 6 0
6: 7 1 5
7: 8 2 6
8: 3 7 9
9: 8 5 4
)"},
    {"dodecahedron", R"(20 30
0: 10 9 8
1: 16 11 9
2: 10 14 12
3: 16 12 17
4: 8 15 13
5: 15 11 19
6: 18 14 13
7: 17 18 19
8: 14 0 4
9: 0 1 15
10: 16 0 2
11: 1 17 5
12: 3 2 18
13: 4 19 6
14: 2 8 6
15: 9 5 4
16: 1 10 3
17: 11 3 7
18: 12 6 7
19: 13 5 7
)"},
    {"icosahedron", R"(12 30
0: 3 1 2 4 6
1: 2 0 3 7 5
2: 0 1 5 8 4
3: 1 0 6 9 7
4: 6 0 2 8 10
5: 2 1 7 11 8
6: 3 0 4 10 9
7: 5 1 3 9 11
8: 4 2 5 11 10
9: 7 3 6 10 11
10: 6 4 8 11 9
11: 5 7 9 10 8
)"},
    {"fig1a", R"(17 32
0: 5 1 2 3 4
1: 6 7 8 2 0
2: 1 9 10 3 0
3: 4 0 2 11 12
4: 5 0 3 13 14
5: 16 6 0 4 15
6: 7 1 5 16
7: 8 1 6
8: 7 9 1
9: 8 10 2
10: 9 11 2
11: 3 10 12
12: 3 11 13
13: 14 4 12
14: 15 4 13
15: 16 5 14
16: 6 5 15
)"},
    {"fig1b", R"(17 31
0: 5 1 2 3 4
1: 6 8 9 2 0
2: 1 10 11 3 0
3: 4 0 2 12 13
4: 5 0 3 14 15
5: 7 0 4 16
6: 8 1 7
7: 6 5 16
8: 9 1 6
9: 8 10 1
10: 9 11 2
11: 10 12 2
12: 3 11 13
13: 3 12 14
14: 15 4 13
15: 16 4 14
16: 7 5 15
)"},
    {"fig2a", R"(12 19
0: 5 1 2 3 4
1: 10 6 2 0
2: 0 1 6 7 3
3: 0 2 7 11
4: 5 0 11
5: 9 0 4
6: 1 8 2
7: 3 2 8
8: 6 7
9: 10 5
10: 1 9
11: 4 3
)"},
    {"fig2b", R"(13 20
0: 5 1 2 3 4
1: 11 6 2 0
2: 0 1 6 7 3
3: 0 2 7 4
4: 12 0 3
5: 10 0 12
6: 8 2 1
7: 3 2 9
8: 6 9
9: 8 7
10: 11 5
11: 1 10
12: 5 4
)"},
    {"fig2c", R"(14 21
0: 5 1 2 3 4
1: 13 6 2 0
2: 0 1 6 7 3
3: 0 2 7 9
4: 0 9 10
5: 11 12 0
6: 1 8 2
7: 3 2 8
8: 6 7
9: 4 3
10: 11 4
11: 5 10
12: 13 5
13: 1 12
)"},
};

}  // namespace

const std::vector<std::string_view>& named_graphs() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& e : kNamed) out.push_back(e.name);
        return out;
    }();
    return names;
}

std::string_view named_text(std::string_view name) {
    for (const auto& e : kNamed)
        if (e.name == name) return e.text;
    throw Error(ErrorCode::UnknownName, "no named graph '" + std::string(name) + "'");
}

PlaneGraph named(std::string_view name) { return from_rotation_text(named_text(name)); }

namespace {

struct Tri {
    VertexId a, b, c;  // face walk a -> b -> c -> a
};

void insert_after(std::vector<VertexId>& r, VertexId after, VertexId x) {
    const auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, x);
}

void erase_value(std::vector<VertexId>& r, VertexId x) { r.erase(std::find(r.begin(), r.end(), x)); }

Rotations stacked_triangulation(std::size_t n, std::mt19937_64& rng) {
    Rotations rot{{1, 2}, {2, 0}, {0, 1}};
    std::vector<Tri> faces{{0, 1, 2}, {1, 0, 2}};
    while (rot.size() < n) {
        const std::size_t k = rng() % faces.size();
        const Tri f = faces[k];
        const auto x = static_cast<VertexId>(rot.size());
        insert_after(rot[f.b], f.a, x);
        insert_after(rot[f.c], f.b, x);
        insert_after(rot[f.a], f.c, x);
        rot.push_back({f.b, f.a, f.c});
        faces[k] = {f.a, f.b, x};
        faces.push_back({f.b, f.c, x});
        faces.push_back({f.c, f.a, x});
    }
    return rot;
}

void trim_degrees(Rotations& rot) {
    for (VertexId v = 0; v < rot.size(); ++v) {
        while (rot[v].size() > 5) {
            VertexId pick = rot[v].front();
            for (VertexId u : rot[v])
                if (rot[u].size() > rot[pick].size() || (rot[u].size() == rot[pick].size() && u < pick)) pick = u;
            erase_value(rot[v], pick);
            erase_value(rot[pick], v);
        }
    }
}

}  // namespace

PlaneGraph random_plane(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::GenerationFailed, "random_plane needs n >= 3");
    constexpr int kAttempts = 16;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        Rotations rot = stacked_triangulation(n, rng);
        trim_degrees(rot);
        const PlaneGraph whole = PlaneGraph::from_rotations(std::move(rot), Connectivity::AllowDisconnected);
        auto parts = whole.components();
        const auto largest = std::max_element(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
            return x.size() < y.size();
        });
        if (largest->size() * 2 < n) continue;
        if (parts.size() == 1) return whole;
        return whole.subgraph(*largest);
    }
    throw Error(ErrorCode::GenerationFailed,
                "no component of size >= n/2 after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace twodist
