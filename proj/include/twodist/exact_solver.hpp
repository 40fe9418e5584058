#pragma once

#include <cstdint>
#include <optional>

#include "twodist/conflict.hpp"
#include "twodist/plane_graph.hpp"

namespace twodist {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Search-tree node limit. Running out yields an Unknown verdict, never a value.
struct SearchBudget {
    std::uint64_t max_nodes = kDefaultNodeBudget;
};

enum class SearchStatus { Colored, Infeasible, Unknown };

struct SearchResult {
    SearchStatus status = SearchStatus::Unknown;
    std::optional<Coloring> coloring;  // set iff status == Colored
    std::uint64_t nodes = 0;
};

/// Decide whether g admits a 2-distance coloring with k colors.
///
/// Plain backtracking with forward checking over the conflict sets. Vertices
/// are taken in descending d2 (ties by id) and the first one is pinned to
/// color 1; colors are tried in ascending order.
SearchResult color_with_k(const PlaneGraph& g, int k, SearchBudget budget = {});

struct Chi2Result {
    std::optional<int> value;  // nullopt = unknown (budget exhausted)
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
};

/// Smallest k for which color_with_k succeeds, starting from max degree + 1.
/// The budget applies to each k separately.
Chi2Result chi2_exact(const PlaneGraph& g, SearchBudget budget = {});

}  // namespace twodist
