#include "turan/containment.hpp"

namespace turan {

Pattern::Pattern(Graph h) : h_(std::move(h)) {
    const int k = h_.order();
    for (int v = 0; v < k; ++v) degree_.push_back(h_.degree(v));

    auto make_plan = [&](std::vector<int> seeds) {
        Plan plan;
        VertexSet placed;
        for (int v : seeds) {
            plan.order.push_back(v);
            placed.insert(v);
        }
        while (static_cast<int>(plan.order.size()) < k) {
            int best = -1;
            std::pair<int, int> key{-1, -1};
            (h_.vertices() - placed).for_each([&](int v) {
                std::pair<int, int> kv{(h_.neighbors(v) & placed).size(), degree_[v]};
                if (kv > key) {
                    key = kv;
                    best = v;
                }
            });
            plan.order.push_back(best);
            placed.insert(best);
        }
        plan.back_neighbors.resize(plan.order.size());
        for (std::size_t i = 0; i < plan.order.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (h_.adjacent(plan.order[i], plan.order[j])) plan.back_neighbors[i].push_back(static_cast<int>(j));
            }
        }
        return plan;
    };

    free_plan_ = make_plan({});
    for (auto [a, b] : h_.edges()) {
        edge_plans_.push_back(make_plan({a, b}));
        edge_plans_.push_back(make_plan({b, a}));
    }
}

bool Pattern::extend(const Graph& g, const Plan& plan, std::size_t depth, std::vector<int>& image,
                     VertexSet used) const {
    if (depth == plan.order.size()) return true;
    const int hv = plan.order[depth];
    VertexSet candidates = g.vertices() - used;
    for (int j : plan.back_neighbors[depth]) candidates = candidates & g.neighbors(image[static_cast<std::size_t>(j)]);
    bool found = false;
    candidates.for_each([&](int c) {
        if (found || g.degree(c) < degree_[hv]) return;
        image[depth] = c;
        if (extend(g, plan, depth + 1, image, used | VertexSet::single(c))) found = true;
    });
    return found;
}

bool Pattern::found_in(const Graph& g) const {
    if (h_.order() > g.order() || h_.edge_count() > g.edge_count()) return false;
    std::vector<int> image(free_plan_.order.size(), -1);
    return extend(g, free_plan_, 0, image, VertexSet());
}

bool Pattern::found_through_edge(const Graph& g, int u, int v) const {
    if (h_.order() > g.order() || !g.adjacent(u, v)) return false;
    std::vector<int> image(static_cast<std::size_t>(h_.order()), -1);
    for (const auto& plan : edge_plans_) {
        // Map the plan's seed edge onto (u, v); the reverse orientation is its own plan.
        if (g.degree(u) < degree_[plan.order[0]] || g.degree(v) < degree_[plan.order[1]]) continue;
        image[0] = u;
        image[1] = v;
        if (extend(g, plan, 2, image, VertexSet::single(u) | VertexSet::single(v))) return true;
    }
    return false;
}

std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& h) {
    if (h.order() > g.order() || h.edge_count() > g.edge_count()) return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(h.order()), -1);
    // Plain backtracking in index order, independent of Pattern's plans.
    auto extend = [&](auto&& self, int hv, VertexSet used) -> bool {
        if (hv == h.order()) return true;
        VertexSet candidates = g.vertices() - used;
        for (int w = 0; w < hv; ++w) {
            if (h.adjacent(hv, w)) candidates = candidates & g.neighbors(image[static_cast<std::size_t>(w)]);
        }
        bool ok = false;
        candidates.for_each([&](int c) {
            if (ok || g.degree(c) < h.degree(hv)) return;
            image[static_cast<std::size_t>(hv)] = c;
            ok = self(self, hv + 1, used | VertexSet::single(c));
        });
        return ok;
    };
    if (!extend(extend, 0, VertexSet())) return std::nullopt;
    return image;
}

bool contains(const Graph& g, const Graph& h) { return Pattern(h).found_in(g); }

bool contains_through_edge(const Graph& g, const Graph& h, int u, int v) {
    return Pattern(h).found_through_edge(g, u, v);
}

namespace {

class BlowupEmbedder {
public:
    BlowupEmbedder(const Graph& g, const BlowupShape& shape) : g_(g), legs_(shape.legs), copies_(shape.copies) {}

    bool run() {
        const int s = static_cast<int>(legs_.size());
        long interior = 1;
        for (int len : legs_) interior += len - 1;
        if (s + copies_ * interior > g_.order()) return false;
        leaves_.assign(legs_.size(), -1);
        return place_leaf(0, VertexSet());
    }

private:
    bool place_leaf(int i, VertexSet used) {
        if (i == static_cast<int>(legs_.size())) return place_copy(0, -1, used);
        // Legs of equal length are interchangeable, so their leaves are placed in increasing order.
        int lowest = 0;
        for (int j = 0; j < i; ++j) {
            if (legs_[static_cast<std::size_t>(j)] == legs_[static_cast<std::size_t>(i)]) lowest = leaves_[static_cast<std::size_t>(j)] + 1;
        }
        for (int x = lowest; x < g_.order(); ++x) {
            if (used.contains(x) || g_.degree(x) < copies_) continue;
            leaves_[static_cast<std::size_t>(i)] = x;
            if (place_leaf(i + 1, used | VertexSet::single(x))) return true;
        }
        return false;
    }

    /// Copies are interchangeable, so their centers increase.
    bool place_copy(int copy, int previous_center, VertexSet used) {
        if (copy == copies_) return true;
        for (int c = previous_center + 1; c < g_.order(); ++c) {
            if (used.contains(c) || g_.degree(c) < static_cast<int>(legs_.size())) continue;
            if (place_leg(copy, c, 0, used | VertexSet::single(c))) return true;
        }
        return false;
    }

    bool place_leg(int copy, int center, std::size_t leg, VertexSet used) {
        if (leg == legs_.size()) return place_copy(copy + 1, center, used);
        return walk(copy, center, leg, center, legs_[leg], used);
    }

    /// Extends leg `leg` from `at` with `remaining` edges to go, ending on its leaf.
    bool walk(int copy, int center, std::size_t leg, int at, int remaining, VertexSet used) {
        const int leaf = leaves_[leg];
        if (remaining == 1) return g_.adjacent(at, leaf) && place_leg(copy, center, leg + 1, used);
        bool ok = false;
        (g_.neighbors(at) - used).for_each([&](int next) {
            if (!ok) ok = walk(copy, center, leg, next, remaining - 1, used | VertexSet::single(next));
        });
        return ok;
    }

    const Graph& g_;
    std::vector<int> legs_;
    int copies_;
    std::vector<int> leaves_;
};

}  // namespace

bool contains_blowup(const Graph& g, const BlowupShape& shape) {
    if (shape.legs.size() < 2 || shape.copies < 1) throw GraphError("blowup shape needs >= 2 legs and >= 1 copy");
    return BlowupEmbedder(g, shape).run();
}

}  // namespace turan
