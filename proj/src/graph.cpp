#include "turan/graph.hpp"

#include <algorithm>
#include <string>

namespace turan {

VertexSet::VertexSet(std::initializer_list<int> members) {
    for (int v : members) {
        if (v < 0 || v >= kMaxVertices) throw GraphError("vertex index out of range");
        insert(v);
    }
}

VertexSet VertexSet::range(int n) {
    if (n >= 64) return VertexSet(~std::uint64_t{0});
    return VertexSet((std::uint64_t{1} << n) - 1);
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw GraphError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1U;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return VertexSet(rows_[v]);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

void Graph::isolate(int v) {
    check_vertex(v);
    VertexSet(rows_[v]).for_each([&](int u) { rows_[u] &= ~(std::uint64_t{1} << v); });
    rows_[v] = 0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        VertexSet(rows_[u] >> u >> 1 << u << 1).for_each([&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : rows_) twice += std::popcount(row);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (auto row : rows_) d = std::max(d, std::popcount(row));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = kMaxVertices;
    for (auto row : rows_) d = std::min(d, std::popcount(row));
    return d;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next = next | VertexSet(rows_[v]); });
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == vertices();
}

Graph Graph::induced(VertexSet keep) const {
    const auto kept = (keep & vertices()).members();
    Graph out(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            if (adjacent(kept[i], kept[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

VertexSet distance_sphere(const Graph& g, int w, int length) {
    if (w < 0 || w >= g.order()) throw GraphError("vertex " + std::to_string(w) + " out of range");
    if (length < 0) throw GraphError("negative path length");
    VertexSet found;
    // Depth-first over simple paths. A branch is cut once every vertex it could
    // still end at has already been found.
    auto extend = [&](auto&& self, int v, VertexSet used, int remaining) -> void {
        if (remaining == 0) {
            found.insert(v);
            return;
        }
        VertexSet next = g.neighbors(v) - used;
        next.for_each([&](int u) {
            if ((g.vertices() - used - found).empty()) return;
            self(self, u, used | VertexSet::single(u), remaining - 1);
        });
    };
    extend(extend, w, VertexSet::single(w), length);
    return found;
}

VertexSet common_neighborhood(const Graph& g, VertexSet s) {
    if (s.empty()) throw GraphError("common neighbourhood of the empty set");
    VertexSet out = g.vertices();
    s.for_each([&](int v) { out = out & g.neighbors(v); });
    return out;
}

namespace {

class IsomorphismSearch {
public:
    IsomorphismSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {}

    bool run() {
        const int n = g_.order();
        // Map G's vertices in an order where each vertex has as many earlier
        // neighbours as possible, high degree first.
        order_.clear();
        VertexSet placed;
        for (int step = 0; step < n; ++step) {
            int best = -1;
            std::pair<int, int> key{-1, -1};
            (g_.vertices() - placed).for_each([&](int v) {
                std::pair<int, int> k{(g_.neighbors(v) & placed).size(), g_.degree(v)};
                if (k > key) {
                    key = k;
                    best = v;
                }
            });
            order_.push_back(best);
            placed.insert(best);
        }
        image_.assign(static_cast<std::size_t>(n), -1);
        return extend(0, VertexSet());
    }

private:
    bool extend(std::size_t depth, VertexSet used) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        VertexSet candidates = h_.vertices() - used;
        for (std::size_t i = 0; i < depth; ++i) {
            const int u = order_[i];
            candidates = g_.adjacent(u, v) ? candidates & h_.neighbors(image_[u])
                                           : candidates - h_.neighbors(image_[u]);
        }
        bool ok = false;
        candidates.for_each([&](int c) {
            if (ok || h_.degree(c) != g_.degree(v)) return;
            image_[v] = c;
            if (extend(depth + 1, used | VertexSet::single(c))) ok = true;
        });
        if (!ok) image_[v] = -1;
        return ok;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> order_;
    std::vector<int> image_;
};

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    if (sorted_degrees(g) != sorted_degrees(h)) return false;
    return IsomorphismSearch(g, h).run();
}

bool is_almost_regular(const Graph& g, const Rational& k) {
    if (k <= 0) throw GraphError("almost-regularity constant must be positive");
    const int dmax = g.max_degree();
    const int dmin = g.min_degree();
    if (dmax == 0) return true;
    return Rational(dmax) <= k * dmin;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int length) {
    if (length < 0) throw GraphError("negative path length");
    Graph g(length + 1);
    for (int v = 0; v < length; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int s, int t) {
    if (s < 0 || t < 0) throw GraphError("negative part size");
    Graph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph kneser(int n, int k) {
    if (n < 0 || n > 32 || k < 0 || k > n) throw GraphError("unsupported Kneser parameters");
    std::vector<std::uint32_t> sets;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (std::popcount(m) == k) sets.push_back(m);
    }
    if (sets.size() > static_cast<std::size_t>(kMaxVertices)) throw GraphError("Kneser graph too large");
    Graph g(static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

}  // namespace graphs

}  // namespace turan
