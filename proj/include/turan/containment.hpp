#pragma once

#include <optional>
#include <vector>

#include "turan/family_spec.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Injective, edge-preserving map from H's vertices into G (subgraph, not induced).
/// Returns the image of each H vertex, or nullopt.
std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& h);

/// True iff H is a (not necessarily induced) subgraph of G.
bool contains(const Graph& g, const Graph& h);

/// True iff some copy of H in G uses the edge {u, v}. G must contain that edge.
bool contains_through_edge(const Graph& g, const Graph& h, int u, int v);

/// Blowup-aware containment for H = shape.copies * spider(shape.legs) glued at the leaves:
/// places the leaves first, then builds the copies leg by leg with disjointness masks.
bool contains_blowup(const Graph& g, const BlowupShape& shape);

/// Precomputed search plan for repeated containment tests against a fixed pattern.
class Pattern {
public:
    explicit Pattern(Graph h);

    const Graph& graph() const { return h_; }

    bool found_in(const Graph& g) const;
    bool found_through_edge(const Graph& g, int u, int v) const;

private:
    struct Plan {
        std::vector<int> order;
        /// For order[i], the positions j < i of its neighbours in `order`.
        std::vector<std::vector<int>> back_neighbors;
    };

    bool extend(const Graph& g, const Plan& plan, std::size_t depth, std::vector<int>& image, VertexSet used) const;

    Graph h_;
    std::vector<int> degree_;
    Plan free_plan_;
    /// One plan per oriented edge of H, starting with that edge's endpoints.
    std::vector<Plan> edge_plans_;
};

}  // namespace turan
