#include "twodist/surgery.hpp"

#include <algorithm>

namespace twodist {

Surgery delete_and_join(const PlaneGraph& g, VertexId removed, std::span<const Edge> chords, int max_degree) {
    g.check_vertex(removed);
    Surgery out;
    const auto around = g.rotation(removed);
    const std::size_t d = around.size();
    auto position = [&](VertexId u) -> std::size_t {
        return static_cast<std::size_t>(std::find(around.begin(), around.end(), u) - around.begin());
    };

    std::vector<std::vector<VertexId>> partners(d);
    for (auto [a, b] : chords) {
        const std::size_t pa = position(a);
        const std::size_t pb = position(b);
        if (pa == d || pb == d || a == b) {
            out.status = SurgeryStatus::NotNeighbor;
            out.detail = "chord " + std::to_string(a) + "-" + std::to_string(b) + " is not between neighbors of " +
                         std::to_string(removed);
            return out;
        }
        if (g.has_edge(a, b)) continue;
        const Edge e{std::min(a, b), std::max(a, b)};
        if (std::find(out.added.begin(), out.added.end(), e) != out.added.end()) continue;
        out.added.push_back(e);
        partners[pa].push_back(b);
        partners[pb].push_back(a);
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::sort(partners[i].begin(), partners[i].end(), [&](VertexId x, VertexId y) {
            return (position(x) + d - i) % d < (position(y) + d - i) % d;
        });
    }

    const std::size_t n = g.vertex_count();
    out.renumber.assign(n, kRemoved);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v)
        if (v != removed) out.renumber[v] = next++;

    Rotations rot(n - 1);
    for (VertexId v = 0; v < n; ++v) {
        if (v == removed) continue;
        auto& r = rot[out.renumber[v]];
        for (VertexId u : g.rotation(v)) {
            if (u != removed) {
                r.push_back(out.renumber[u]);
                continue;
            }
            for (VertexId w : partners[position(v)]) r.push_back(out.renumber[w]);
        }
        if (static_cast<int>(r.size()) > max_degree) {
            out.status = SurgeryStatus::DegreeOverflow;
            out.detail = "vertex " + std::to_string(v) + " would reach degree " + std::to_string(r.size());
        }
    }
    if (out.status != SurgeryStatus::Ok) return out;
    if (rot.empty()) {
        out.status = SurgeryStatus::EmbeddingBroken;
        out.detail = "deleting the only vertex leaves no graph";
        return out;
    }
    try {
        out.graph = PlaneGraph::from_rotations(std::move(rot), Connectivity::AllowDisconnected);
    } catch (const Error& e) {
        out.status = SurgeryStatus::EmbeddingBroken;
        out.detail = e.what();
    }
    return out;
}

bool neighbors_stay_close(const PlaneGraph& g, VertexId removed, const Surgery& s) {
    if (!s.graph) return false;
    const PlaneGraph& h = *s.graph;
    const auto around = g.rotation(removed);
    for (std::size_t i = 0; i < around.size(); ++i) {
        const VertexId a = s.renumber[around[i]];
        const auto near_a = h.second_neighborhood(a);
        for (std::size_t j = i + 1; j < around.size(); ++j) {
            const VertexId b = s.renumber[around[j]];
            if (!std::binary_search(near_a.begin(), near_a.end(), b)) return false;
        }
    }
    return true;
}

}  // namespace twodist
