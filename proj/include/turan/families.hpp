#pragma once

#include <vector>

#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

/// A tree with an independent, proper subset of its vertices designated as roots.
class RootedTree {
public:
    /// Throws GraphError unless `tree` is a tree and `roots` is a proper independent subset.
    RootedTree(Graph tree, VertexSet roots);

    const Graph& tree() const { return tree_; }
    VertexSet roots() const { return roots_; }
    VertexSet non_roots() const { return tree_.vertices() - roots_; }

private:
    Graph tree_;
    VertexSet roots_;
};

/// s >= 2 legs of positive length joined at a center.
///
/// Vertex 0 is the center; leg i occupies the next legs[i] indices running
/// outward, so its last vertex is leaf i. Leaf order follows leg order.
class Spider {
public:
    explicit Spider(std::vector<int> legs);

    const std::vector<int>& legs() const { return legs_; }
    int leg_count() const { return static_cast<int>(legs_.size()); }
    int longest_leg() const;
    int edge_count() const;

    const Graph& graph() const { return graph_; }
    int center() const { return 0; }
    /// Vertices of leg i from the center (exclusive) out to the leaf (inclusive).
    std::vector<int> leg_vertices(int i) const;
    std::vector<int> leaves() const;
    VertexSet leaf_set() const;

    /// The spider rooted at its leaves.
    RootedTree rooted_at_leaves() const;

private:
    std::vector<int> legs_;
    Graph graph_;
};

/// The s-legged spider with length vector (b, k, ..., k).
Spider spider_sbk(int s, int b, int k);

/// t copies of the tree glued along the roots.
///
/// Roots come first in increasing original order, followed by copy 1's
/// non-roots in original order, then copy 2's, and so on.
Graph blowup(const RootedTree& t, int copies);

/// Vertex of `blowup(t, copies)` that copy `copy` (0-based) of original vertex `v` maps to.
int blowup_vertex(const RootedTree& t, int copy, int v);

struct DensityReport {
    Rational rho;
    /// Non-empty set of non-roots minimising e(S)/|S|; the first minimiser in subset-mask order.
    VertexSet witness;
    Rational witness_rho;
    bool balanced = false;
};

inline constexpr int kMaxDensityNonRoots = 24;

/// Edges with at least one end in s.
int edges_touching(const Graph& g, VertexSet s);

/// Exact density and balancedness by enumerating every non-empty set of non-roots.
DensityReport density(const RootedTree& t);

/// Closed-form balancedness of a spider rooted at its leaves: e(S) >= (s-1) * longest leg.
bool spider_balanced_criterion(const Spider& s);

/// 2 - 1/rho.
Rational exponent_of_density(const Rational& rho);

/// K_{s,t} with every edge subdivided k-1 times. The s-side is 0..s-1, the t-side s..s+t-1.
Graph subdivided_complete_bipartite(int s, int t, int k);

/// subdivided_complete_bipartite(s, t, k) plus one vertex joined to the whole t-side.
Graph subdivided_with_apex(int s, int t, int k);

}  // namespace turan
