#include "turan/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace turan {

RootedTree::RootedTree(Graph tree, VertexSet roots) : tree_(std::move(tree)), roots_(roots) {
    if (tree_.order() == 0) throw GraphError("rooted tree needs at least one vertex");
    if (tree_.edge_count() != tree_.order() - 1 || !tree_.is_connected()) {
        throw GraphError("rooted tree: underlying graph is not a tree");
    }
    if (!roots_.subset_of(tree_.vertices())) throw GraphError("rooted tree: root out of range");
    if (roots_ == tree_.vertices()) throw GraphError("rooted tree: every vertex is a root");
    roots_.for_each([&](int r) {
        if (!(tree_.neighbors(r) & roots_).empty()) throw GraphError("rooted tree: roots are not independent");
    });
}

Spider::Spider(std::vector<int> legs) : legs_(std::move(legs)) {
    if (legs_.size() < 2) throw GraphError("spider needs at least two legs");
    for (int len : legs_) {
        if (len < 1) throw GraphError("spider leg lengths must be positive");
    }
    const long total = 1L + std::accumulate(legs_.begin(), legs_.end(), 0L);
    if (total > kMaxVertices) throw GraphError("spider exceeds 64 vertices");
    graph_ = Graph(static_cast<int>(total));
    int next = 1;
    for (int len : legs_) {
        int prev = 0;
        for (int step = 0; step < len; ++step, ++next) {
            graph_.add_edge(prev, next);
            prev = next;
        }
    }
}

int Spider::longest_leg() const { return *std::max_element(legs_.begin(), legs_.end()); }

int Spider::edge_count() const { return std::accumulate(legs_.begin(), legs_.end(), 0); }

std::vector<int> Spider::leg_vertices(int i) const {
    const int start = 1 + std::accumulate(legs_.begin(), legs_.begin() + i, 0);
    std::vector<int> out(static_cast<std::size_t>(legs_.at(static_cast<std::size_t>(i))));
    std::iota(out.begin(), out.end(), start);
    return out;
}

std::vector<int> Spider::leaves() const {
    std::vector<int> out;
    int pos = 0;
    for (int len : legs_) {
        pos += len;
        out.push_back(pos);
    }
    return out;
}

VertexSet Spider::leaf_set() const {
    VertexSet s;
    for (int v : leaves()) s.insert(v);
    return s;
}

RootedTree Spider::rooted_at_leaves() const { return RootedTree(graph_, leaf_set()); }

Spider spider_sbk(int s, int b, int k) {
    if (s < 2) throw GraphError("spider needs at least two legs");
    std::vector<int> legs(static_cast<std::size_t>(s), k);
    legs[0] = b;
    return Spider(std::move(legs));
}

int blowup_vertex(const RootedTree& t, int copy, int v) {
    const VertexSet roots = t.roots();
    const std::uint64_t below = v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
    if (roots.contains(v)) return (roots & VertexSet(below)).size();
    const int non_roots = t.non_roots().size();
    return roots.size() + copy * non_roots + (t.non_roots() & VertexSet(below)).size();
}

Graph blowup(const RootedTree& t, int copies) {
    if (copies < 1) throw GraphError("blowup needs at least one copy");
    const long order = t.roots().size() + static_cast<long>(copies) * t.non_roots().size();
    if (order > kMaxVertices) {
        throw GraphError("blowup has " + std::to_string(order) + " vertices, more than 64");
    }
    Graph g(static_cast<int>(order));
    const auto edges = t.tree().edges();
    for (int c = 0; c < copies; ++c) {
        for (auto [u, v] : edges) g.add_edge(blowup_vertex(t, c, u), blowup_vertex(t, c, v));
    }
    return g;
}

int edges_touching(const Graph& g, VertexSet s) {
    int count = 0;
    for (auto [u, v] : g.edges()) {
        if (s.contains(u) || s.contains(v)) ++count;
    }
    return count;
}

DensityReport density(const RootedTree& t) {
    const auto free = t.non_roots().members();
    const int m = static_cast<int>(free.size());
    if (m > kMaxDensityNonRoots) {
        throw GraphError("density: " + std::to_string(m) + " non-root vertices exceeds enumeration cap of 24");
    }

    // Each edge becomes a mask over the non-root index space; e(S) counts masks meeting S.
    std::vector<std::uint32_t> edge_masks;
    for (auto [u, v] : t.tree().edges()) {
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i) {
            if (free[static_cast<std::size_t>(i)] == u || free[static_cast<std::size_t>(i)] == v) mask |= 1U << i;
        }
        edge_masks.push_back(mask);
    }

    DensityReport report;
    const std::uint32_t all = m == 32 ? ~0U : (1U << m) - 1;
    report.rho = Rational(edges_touching(t.tree(), t.non_roots()), m);
    report.rho.canonicalize();

    long best_e = -1;
    long best_size = 1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t s = 1; s <= all && s != 0; ++s) {
        long e = 0;
        for (auto mask : edge_masks) e += (mask & s) != 0;
        const long size = std::popcount(s);
        if (best_e < 0 || e * best_size < best_e * size) {
            best_e = e;
            best_size = size;
            best_mask = s;
        }
    }
    for (int i = 0; i < m; ++i) {
        if ((best_mask >> i) & 1U) report.witness.insert(free[static_cast<std::size_t>(i)]);
    }
    report.witness_rho = Rational(best_e, best_size);
    report.witness_rho.canonicalize();
    report.balanced = report.witness_rho >= report.rho;
    return report;
}

bool spider_balanced_criterion(const Spider& s) {
    return s.edge_count() >= (s.leg_count() - 1) * s.longest_leg();
}

Rational exponent_of_density(const Rational& rho) {
    if (rho <= 0) throw std::invalid_argument("density must be positive");
    Rational out = 2 - 1 / rho;
    out.canonicalize();
    return out;
}

Graph subdivided_complete_bipartite(int s, int t, int k) {
    if (s < 1 || t < 1 || k < 1) throw GraphError("subdivision parameters must be positive");
    const long order = s + t + static_cast<long>(s) * t * (k - 1);
    if (order > kMaxVertices) throw GraphError("subdivided K_{s,t} exceeds 64 vertices");
    Graph g(static_cast<int>(order));
    int next = s + t;
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < t; ++b) {
            int prev = a;
            for (int step = 1; step < k; ++step, ++next) {
                g.add_edge(prev, next);
                prev = next;
            }
            g.add_edge(prev, s + b);
        }
    }
    return g;
}

Graph subdivided_with_apex(int s, int t, int k) {
    const Graph base = subdivided_complete_bipartite(s, t, k);
    if (base.order() + 1 > kMaxVertices) throw GraphError("L_{s,t}(k) exceeds 64 vertices");
    Graph g(base.order() + 1);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (int b = 0; b < t; ++b) g.add_edge(base.order(), s + b);
    return g;
}

}  // namespace turan
