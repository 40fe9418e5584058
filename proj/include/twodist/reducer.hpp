#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "twodist/configurations.hpp"
#include "twodist/conflict.hpp"
#include "twodist/exact_solver.hpp"
#include "twodist/plane_graph.hpp"

namespace twodist {

struct ReductionTrace {
    std::size_t step = 0;
    std::string rule;
    Binding binding;
    VertexId deleted = 0;                // id in the graph the step was applied to
    std::vector<Edge> added_edges;       // chords actually inserted (skip-if-present applied)
    std::vector<VertexId> renumber;      // old id -> new id, kRemoved for `deleted`
    int claimed_bound = 0;
    int observed_d2 = 0;
    int colors_in_n2 = -1;               // distinct colors around `deleted` at extension, -1 until extended
    std::size_t v_plus_e_before = 0;
    std::size_t v_plus_e_after = 0;
};

/// Delete the matched vertex and insert the rule's chords.
/// Throws EmbeddingBroken or DegreeOverflow if the result is not a valid
/// plane graph with max degree <= 5.
std::pair<PlaneGraph, ReductionTrace> apply(const PlaneGraph& g, const ConfigMatch& m);

/// Every surviving pair at distance <= 2 in g is still within distance 2 in h.
bool is_proper_wrt(const PlaneGraph& g, const PlaneGraph& h, const ReductionTrace& t);

/// Lift a coloring of the reduced graph back to g, giving the deleted vertex
/// the lowest color unused in its second neighborhood. Throws NoAvailableColor.
/// If `distinct_around` is set it receives the number of distinct colors seen.
Coloring extend(const PlaneGraph& g, const ReductionTrace& t, const Coloring& reduced,
                int* distinct_around = nullptr);

/// detect() found nothing; the graph was colored by exact search instead.
struct Anomaly {
    std::size_t step = 0;
    std::string graph;  // rotation text
    SearchStatus fallback = SearchStatus::Unknown;
};

struct Color16Options {
    std::size_t base_size = 16;             // graphs this small get colors 1..n directly (minimum 1)
    SearchBudget fallback_budget{100'000'000};
    /// Called after each reduction with the graph before and after it.
    std::function<void(const PlaneGraph&, const PlaneGraph&, const ReductionTrace&)> on_step;
};

struct Color16Result {
    Coloring coloring{0, kDefaultPalette};
    std::vector<ReductionTrace> traces;  // in the order the reductions were made
    std::vector<Anomaly> anomalies;
};

/// Color g with at most 16 colors by repeatedly reducing a detected
/// configuration, coloring the smaller graph, and extending.
/// Throws DegreeTooHigh, and AnomalyNoConfiguration if a graph without a
/// configuration also defeats the exact fallback.
Color16Result color16(const PlaneGraph& g, const Color16Options& options = {});

}  // namespace twodist
