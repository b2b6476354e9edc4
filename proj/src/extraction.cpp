#include "turan/extraction.hpp"

#include <algorithm>
#include <map>

namespace turan {

namespace {

VertexSet interior(const Path& p) {
    VertexSet s;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) s.insert(p[i]);
    return s;
}

void check_bipartition(const Graph& b, VertexSet x, VertexSet y) {
    if (!(x & y).empty() || (x | y) != b.vertices()) throw ExtractionError("X and Y must partition the vertices");
    if (x.empty() || y.empty()) throw ExtractionError("both parts must be nonempty");
    for (auto [u, v] : b.edges()) {
        if (x.contains(u) == x.contains(v)) throw ExtractionError("edge inside one part");
    }
}

}  // namespace

ThroughCount count_admissible_through(const PathClassification& pc, int x, int w, int y, int i, int j) {
    if (j < 2 || j > pc.j_max()) throw ExtractionError("j must be in 2..j_max");
    if (i < 1 || i >= j) throw ExtractionError("i must be in 1..j-1");
    ThroughCount out;
    out.bound = (i == 1 || i == j - 1) ? pc.threshold(j - 1) : pc.threshold(i) * pc.threshold(j - i);
    if (x == y) return out;
    for (const auto& p : pc.admissible(j, x, y)) {
        const bool forward = p.front() == x;
        const int at = forward ? p[static_cast<std::size_t>(i)] : p[p.size() - 1 - static_cast<std::size_t>(i)];
        if (at == w) ++out.exact;
    }
    return out;
}

std::vector<Path> pack_disjoint_paths(const std::vector<Path>& family) {
    std::vector<Path> kept;
    if (family.empty()) return kept;
    const auto ends = std::minmax(family.front().front(), family.front().back());
    VertexSet used;
    for (const auto& p : family) {
        if (p.size() != family.front().size() || std::minmax(p.front(), p.back()) != ends) {
            throw ExtractionError("paths must share their ends and length");
        }
        const VertexSet in = interior(p);
        if (!(in & used).empty()) continue;
        used = used | in;
        kept.push_back(p);
    }
    return kept;
}

BigInt packing_bound(std::uint64_t size, int j, const BigInt& shorter_threshold) {
    const BigInt den = BigInt(j) * j * shorter_threshold * shorter_threshold;
    return ceil(Rational(BigInt(static_cast<unsigned long>(size)), den));
}

std::vector<SpiderEmbedding> pack_disjoint_spiders(const std::vector<SpiderEmbedding>& family) {
    std::vector<SpiderEmbedding> kept;
    if (family.empty()) return kept;
    const auto leaves = family.front().leaves();
    const auto lengths = family.front().lengths();
    VertexSet used;
    for (const auto& s : family) {
        if (s.leaves() != leaves || s.lengths() != lengths) throw ExtractionError("spiders must share leaf and length vectors");
        VertexSet body = VertexSet::single(s.center);
        for (const auto& leg : s.legs) body = body | interior(leg);
        if (!(body & used).empty()) continue;
        used = used | body;
        kept.push_back(s);
    }
    return kept;
}

bool spider_packing_bound_applies(const std::vector<int>& lengths, const std::vector<BigInt>& thresholds) {
    int total = 0;
    BigInt product = 1;
    for (int l : lengths) {
        total += l;
        product *= thresholds.at(static_cast<std::size_t>(l));
    }
    const BigInt& t = thresholds.at(static_cast<std::size_t>(total - 1));
    return product <= t * t;
}

SpiderEmbedding shrink_to_spider(const std::vector<Path>& family, int i) {
    if (family.empty()) throw ExtractionError("empty path family");
    const std::size_t h = family.front().size() - 1;
    if (i < 1 || static_cast<std::size_t>(i) > h) throw ExtractionError("height must be in 1..h");
    for (const auto& p : family) {
        if (p.size() != h + 1 || p.front() != family.front().front()) throw ExtractionError("paths must share start and length");
    }
    const std::size_t at = h - static_cast<std::size_t>(i);
    std::map<int, std::vector<Path>> groups;
    for (const auto& p : family) groups[p[at]].emplace_back(p.begin() + static_cast<long>(at), p.end());

    SpiderEmbedding best;
    for (const auto& [center, suffixes] : groups) {
        SpiderEmbedding s;
        s.center = center;
        VertexSet used = VertexSet::single(center);
        for (const auto& leg : suffixes) {
            VertexSet body;
            for (std::size_t k = 1; k < leg.size(); ++k) body.insert(leg[k]);
            if (!(body & used).empty()) continue;
            used = used | body;
            s.legs.push_back(leg);
        }
        if (s.legs.size() > best.legs.size()) best = std::move(s);
    }
    return best;
}

BigInt shrink_bound(std::uint64_t size, int h, int max_degree) {
    const BigInt den = BigInt(h) * pow(BigInt(max_degree), static_cast<unsigned long>(h - 1));
    if (den == 0) return BigInt(static_cast<unsigned long>(size));
    return ceil(Rational(BigInt(static_cast<unsigned long>(size)), den));
}

NeighborhoodExtract common_neighborhood_extract(const Graph& b, VertexSet x, VertexSet y, int m) {
    check_bipartition(b, x, y);
    if (m < 1 || m > y.size()) throw ExtractionError("m must be in 1..|Y|");
    const int e = b.edge_count();
    // c |Y| = e / |X|.
    if (Rational(BigInt(e), BigInt(x.size())) < 2 * m) throw ExtractionError("precondition c|Y| >= 2m fails");
    Rational c(BigInt(e), BigInt(x.size() * y.size()));
    c.canonicalize();

    NeighborhoodExtract out;
    Rational half = c / 2;
    Rational bound = x.size();
    for (int k = 0; k < m; ++k) bound *= half;
    out.bound = bound;

    const auto ys = y.members();
    std::vector<int> pick;
    int best = -1;
    auto search = [&](auto&& self, std::size_t from, VertexSet common) -> void {
        if (static_cast<int>(pick.size()) == m) {
            if (common.size() > best) {
                best = common.size();
                out.subset = pick;
                out.common = common;
            }
            return;
        }
        for (std::size_t i = from; i + (static_cast<std::size_t>(m) - pick.size()) <= ys.size(); ++i) {
            pick.push_back(ys[i]);
            self(self, i + 1, common & b.neighbors(ys[i]));
            pick.pop_back();
        }
    };
    search(search, 0, x);
    if (Rational(best) < out.bound) throw std::logic_error("no m-subset meets the common neighbourhood bound");
    return out;
}

CleanResult clean_min_degree(const Graph& b, VertexSet x, VertexSet y) {
    check_bipartition(b, x, y);
    const int e = b.edge_count();
    if (e < 1) throw ExtractionError("the graph has no edges");
    CleanResult out;
    out.x_floor = Rational(BigInt(e), BigInt(4 * x.size()));
    out.y_floor = Rational(BigInt(e), BigInt(4 * y.size()));
    out.x_floor.canonicalize();
    out.y_floor.canonicalize();
    out.graph = b;
    out.kept = b.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        out.kept.for_each([&](int v) {
            const Rational& floor = x.contains(v) ? out.x_floor : out.y_floor;
            if (Rational(out.graph.degree(v)) < floor) {
                out.graph.isolate(v);
                out.kept.erase(v);
                changed = true;
            }
        });
    }
    return out;
}

}  // namespace turan
