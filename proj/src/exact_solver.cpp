#include "twodist/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace twodist {

namespace {

using Mask = std::uint64_t;

class Backtracker {
public:
    Backtracker(const PlaneGraph& g, int k, SearchBudget budget)
        : k_(k), budget_(budget), conflicts_(conflict_sets(g)), order_(g.vertex_count()) {
        std::iota(order_.begin(), order_.end(), VertexId{0});
        std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
            return conflicts_[a].size() > conflicts_[b].size();
        });
        const Mask full = k >= 64 ? ~Mask{0} : ((Mask{1} << k) - 1);
        domain_.assign(g.vertex_count(), full);
        color_.assign(g.vertex_count(), 0);
    }

    SearchResult run() {
        SearchResult result;
        if (order_.empty()) {
            result.status = SearchStatus::Colored;
            result.coloring = Coloring(0, k_);
            return result;
        }
        // Symmetry breaking: the first vertex in the order takes color 1.
        domain_[order_.front()] = 1;
        const auto outcome = search(0);
        result.nodes = nodes_;
        if (outcome == Outcome::Found) {
            result.status = SearchStatus::Colored;
            Coloring c(color_.size(), k_);
            c.colors = color_;
            result.coloring = std::move(c);
        } else if (outcome == Outcome::Exhausted) {
            result.status = SearchStatus::Infeasible;
        } else {
            result.status = SearchStatus::Unknown;
        }
        return result;
    }

private:
    enum class Outcome { Found, Exhausted, OutOfBudget };

    Outcome search(std::size_t depth) {
        if (depth == order_.size()) return Outcome::Found;
        if (++nodes_ > budget_.max_nodes) return Outcome::OutOfBudget;
        const VertexId v = order_[depth];
        Mask options = domain_[v];
        while (options != 0) {
            const int bit = std::countr_zero(options);
            options &= options - 1;
            const Mask pick = Mask{1} << bit;
            color_[v] = bit + 1;

            // Forward check: remove the color from uncolored conflicting vertices.
            bool wiped = false;
            std::vector<std::pair<VertexId, Mask>> undo;
            for (VertexId u : conflicts_[v]) {
                if (color_[u] != 0 || (domain_[u] & pick) == 0) continue;
                undo.emplace_back(u, domain_[u]);
                domain_[u] &= ~pick;
                if (domain_[u] == 0) {
                    wiped = true;
                    break;
                }
            }
            Outcome sub = Outcome::Exhausted;
            if (!wiped) sub = search(depth + 1);
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) domain_[it->first] = it->second;
            if (sub == Outcome::Found) return sub;
            color_[v] = 0;
            if (sub == Outcome::OutOfBudget) return sub;
        }
        return Outcome::Exhausted;
    }

    int k_;
    SearchBudget budget_;
    std::vector<std::vector<VertexId>> conflicts_;
    std::vector<VertexId> order_;
    std::vector<Mask> domain_;
    std::vector<int> color_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult color_with_k(const PlaneGraph& g, int k, SearchBudget budget) {
    if (k < 1) throw std::invalid_argument("color_with_k: k must be positive");
    if (k > 64) throw std::invalid_argument("color_with_k: palettes above 64 colors are not supported");
    return Backtracker(g, k, budget).run();
}

Chi2Result chi2_exact(const PlaneGraph& g, SearchBudget budget) {
    Chi2Result out;
    const int start = std::max(1, g.max_degree() + 1);
    const int stop = std::min<int>(64, static_cast<int>(g.vertex_count()));
    for (int k = start; k <= stop; ++k) {
        auto r = color_with_k(g, k, budget);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::Unknown) return out;
        if (r.status == SearchStatus::Colored) {
            out.value = k;
            out.witness = std::move(r.coloring);
            return out;
        }
    }
    return out;
}

}  // namespace twodist
