#include "twodist/reducer.hpp"

#include <algorithm>

#include "twodist/error.hpp"

namespace twodist {

std::pair<PlaneGraph, ReductionTrace> apply(const PlaneGraph& g, const ConfigMatch& m) {
    const VertexId z = m.deleted_vertex();
    const auto chords = m.chords();
    Surgery s = delete_and_join(g, z, chords);
    switch (s.status) {
        case SurgeryStatus::Ok: break;
        case SurgeryStatus::DegreeOverflow:
            throw Error(ErrorCode::DegreeOverflow, m.rule->id + ": " + s.detail);
        default:
            throw Error(ErrorCode::EmbeddingBroken, m.rule->id + ": " + s.detail);
    }
    ReductionTrace t;
    t.rule = m.rule->id;
    t.binding = m.binding;
    t.deleted = z;
    t.added_edges = std::move(s.added);
    t.renumber = std::move(s.renumber);
    t.claimed_bound = m.rule->claimed_d2_bound;
    t.observed_d2 = g.d2(z);
    t.v_plus_e_before = g.vertex_count() + g.edge_count();
    t.v_plus_e_after = s.graph->vertex_count() + s.graph->edge_count();
    return {std::move(*s.graph), std::move(t)};
}

bool is_proper_wrt(const PlaneGraph& g, const PlaneGraph& h, const ReductionTrace& t) {
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (x == t.deleted) continue;
        const VertexId hx = t.renumber[x];
        const auto near = h.second_neighborhood(hx);
        for (VertexId y : g.second_neighborhood(x)) {
            if (y == t.deleted || y < x) continue;
            if (!std::binary_search(near.begin(), near.end(), t.renumber[y])) return false;
        }
    }
    return true;
}

Coloring extend(const PlaneGraph& g, const ReductionTrace& t, const Coloring& reduced, int* distinct_around) {
    Coloring c(g.vertex_count(), reduced.palette);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != t.deleted) c.colors[v] = reduced.colors.at(t.renumber[v]);

    std::vector<bool> taken(static_cast<std::size_t>(c.palette) + 1, false);
    int distinct = 0;
    for (VertexId u : g.second_neighborhood(t.deleted)) {
        const int k = c.colors[u];
        if (k >= 1 && k <= c.palette && !taken[k]) {
            taken[k] = true;
            ++distinct;
        }
    }
    if (distinct_around) *distinct_around = distinct;
    for (int k = 1; k <= c.palette; ++k) {
        if (!taken[k]) {
            c.colors[t.deleted] = k;
            return c;
        }
    }
    throw Error(ErrorCode::NoAvailableColor, "all " + std::to_string(c.palette) + " colors appear around vertex " +
                                                 std::to_string(t.deleted) + " (rule " + t.rule + ")");
}

namespace {

class Engine {
public:
    Engine(const Color16Options& options, Color16Result& out) : opt_(options), out_(out) {}

    Coloring solve(const PlaneGraph& g) {
        if (g.component_count() > 1) return solve_parts(g);
        const std::size_t base = std::clamp<std::size_t>(opt_.base_size, 1, kDefaultPalette);
        if (g.vertex_count() <= base) {
            Coloring c(g.vertex_count());
            for (VertexId v = 0; v < g.vertex_count(); ++v) c.colors[v] = static_cast<int>(v) + 1;
            return c;
        }
        auto match = detect(g);
        if (!match) return fallback(g);

        auto [h, t] = apply(g, *match);
        t.step = step_++;
        if (opt_.on_step) opt_.on_step(g, h, t);
        const std::size_t slot = out_.traces.size();
        out_.traces.push_back(t);
        const Coloring reduced = solve(h);
        int seen = 0;
        Coloring c = extend(g, t, reduced, &seen);
        out_.traces[slot].colors_in_n2 = seen;
        return c;
    }

private:
    Coloring solve_parts(const PlaneGraph& g) {
        Coloring c(g.vertex_count());
        for (const auto& part : g.components()) {
            const Coloring sub = solve(g.subgraph(part));
            for (std::size_t i = 0; i < part.size(); ++i) c.colors[part[i]] = sub.colors[i];
        }
        return c;
    }

    Coloring fallback(const PlaneGraph& g) {
        Anomaly a;
        a.step = step_;
        a.graph = to_rotation_text(g);
        auto r = color_with_k(g, kDefaultPalette, opt_.fallback_budget);
        a.fallback = r.status;
        out_.anomalies.push_back(a);
        if (r.status != SearchStatus::Colored)
            throw Error(ErrorCode::AnomalyNoConfiguration,
                        "no configuration and exact search failed on a " + std::to_string(g.vertex_count()) +
                            "-vertex graph:\n" + a.graph);
        return std::move(*r.coloring);
    }

    const Color16Options& opt_;
    Color16Result& out_;
    std::size_t step_ = 0;
};

}  // namespace

Color16Result color16(const PlaneGraph& g, const Color16Options& options) {
    if (g.max_degree() > kMaxDegree)
        throw Error(ErrorCode::DegreeTooHigh, "maximum degree " + std::to_string(g.max_degree()) + " exceeds 5");
    Color16Result out;
    Engine engine(options, out);
    out.coloring = engine.solve(g);
    return out;
}

}  // namespace twodist
