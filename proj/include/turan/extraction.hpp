#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"
#include "turan/path_classifier.hpp"
#include "turan/rational.hpp"

namespace turan {

class ExtractionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ThroughCount {
    std::uint64_t exact = 0;
    /// threshold(i) * threshold(j - i), or threshold(j - 1) when i is 1 or j - 1.
    BigInt bound;
};

/// Admissible j-paths from x to y whose (i+1)-th vertex is w. Requires 1 <= i < j <= pc.j_max().
ThroughCount count_admissible_through(const PathClassification& pc, int x, int w, int y, int i, int j);

/// Greedy maximal subfamily, pairwise vertex disjoint outside the common ends, in input order.
/// All paths must share their (unordered) ends and length.
std::vector<Path> pack_disjoint_paths(const std::vector<Path>& family);

/// ceil(size / (j^2 t^2)) where t is the threshold for length j - 1.
BigInt packing_bound(std::uint64_t size, int j, const BigInt& shorter_threshold);

/// Greedy maximal subfamily, pairwise vertex disjoint outside the leaves, in input order.
/// All spiders must share their leaf vector and length vector.
std::vector<SpiderEmbedding> pack_disjoint_spiders(const std::vector<SpiderEmbedding>& family);

/// Whether the spider packing bound is backed by the thresholds: the product of the per-leg
/// thresholds is at most threshold(total - 1)^2. `thresholds` is indexed by length.
bool spider_packing_bound_applies(const std::vector<int>& lengths, const std::vector<BigInt>& thresholds);

/// Paths of a common length h from a common start into some target set, shrunk to a spider of
/// height i whose center is the vertex h - i steps along (the start itself when i = h).
///
/// Every candidate center is tried and the one giving the most legs wins; legs are chosen
/// greedily, pairwise disjoint outside the center.
SpiderEmbedding shrink_to_spider(const std::vector<Path>& family, int i);

/// ceil(size / (h * max_degree^(h-1))).
BigInt shrink_bound(std::uint64_t size, int h, int max_degree);

struct NeighborhoodExtract {
    std::vector<int> subset;
    /// Vertices of X adjacent to every member of `subset`.
    VertexSet common;
    /// (c/2)^m |X| with c = e / (|X| |Y|).
    Rational bound;
};

/// An m-subset of Y with the largest common neighbourhood in X, found exhaustively.
/// Requires a bipartition (X, Y) of b and c |Y| >= 2m.
NeighborhoodExtract common_neighborhood_extract(const Graph& b, VertexSet x, VertexSet y, int m);

struct CleanResult {
    /// b with the deleted vertices isolated.
    Graph graph;
    VertexSet kept;
    Rational x_floor;  ///< e / (4 |X|)
    Rational y_floor;  ///< e / (4 |Y|)
};

/// Repeatedly deletes X-vertices of degree below x_floor and Y-vertices below y_floor, both
/// fixed from the input graph. Requires a bipartition (X, Y) of b and at least one edge.
CleanResult clean_min_degree(const Graph& b, VertexSet x, VertexSet y);

}  // namespace turan
