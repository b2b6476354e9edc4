#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "turan/rational.hpp"

namespace turan {

inline constexpr int kMaxVertices = 64;

/// Thrown for malformed graphs, out-of-range vertices and similar input errors.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    static VertexSet range(int n);
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    /// Smallest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    /// Members in increasing order.
    std::vector<int> members() const;

    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64) with bitmask adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool adjacent(int u, int v) const;
    VertexSet neighbors(int v) const;
    int degree(int v) const { return neighbors(v).size(); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    /// Removes every edge incident to v; v stays in the vertex range.
    void isolate(int v);

    /// Edges (u, v) with u < v, ordered by u then v.
    std::vector<Edge> edges() const;
    int edge_count() const;
    int max_degree() const;
    int min_degree() const;
    bool is_connected() const;

    /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in increasing order.
    Graph induced(VertexSet keep) const;
    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Vertices z reachable from w by a path of exactly `length` edges with all vertices distinct.
VertexSet distance_sphere(const Graph& g, int w, int length);

/// Intersection of the neighbourhoods of all members of s.
VertexSet common_neighborhood(const Graph& g, VertexSet s);

bool is_isomorphic(const Graph& g, const Graph& h);

/// max degree <= k * min degree. Edgeless graphs qualify vacuously.
bool is_almost_regular(const Graph& g, const Rational& k);

namespace graphs {

Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
/// Path with `length` edges on length+1 vertices.
Graph path(int length);
/// K_{1,leaves}, center is vertex 0.
Graph star(int leaves);
/// K_{s,t}; the s-side is 0..s-1.
Graph complete_bipartite(int s, int t);
Graph petersen();
/// Vertices are the k-subsets of [n] in colex order, adjacent when disjoint.
Graph kneser(int n, int k);

}  // namespace graphs

}  // namespace turan
