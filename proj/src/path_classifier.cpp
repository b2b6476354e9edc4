#include "turan/path_classifier.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace turan {

namespace {

BigInt f_step(int j, const BigInt& previous, const ThresholdConfig& cfg) {
    const BigInt d = 2 * pow(cfg.K, static_cast<unsigned long>(j)) * cfg.L * previous * previous;
    return 10 * pow(BigInt(j), 4) * pow(d, static_cast<unsigned long>(cfg.s + 3));
}

void check_config(const ThresholdConfig& cfg) {
    if (cfg.L < 1 || cfg.K < 1) throw ClassifierError("L and K must be positive");
    if (cfg.s < 2) throw ClassifierError("s must be at least 2");
}

}  // namespace

std::vector<BigInt> f_table(int j_max, const ThresholdConfig& cfg) {
    check_config(cfg);
    if (j_max < 1) throw ClassifierError("j must be at least 1");
    std::vector<BigInt> f(static_cast<std::size_t>(j_max) + 1);
    f[1] = cfg.L;
    for (int j = 2; j <= j_max; ++j) f[static_cast<std::size_t>(j)] = f_step(j, f[static_cast<std::size_t>(j - 1)], cfg);
    return f;
}

BigInt compute_f(int j, const ThresholdConfig& cfg) { return f_table(j, cfg).back(); }

DerivedConstants derived_constants(int j, const ThresholdConfig& cfg) {
    if (j < 2) throw ClassifierError("derived constants need j >= 2");
    const BigInt prev = compute_f(j - 1, cfg);
    DerivedConstants c;
    c.D = 2 * pow(cfg.K, static_cast<unsigned long>(j)) * cfg.L * prev * prev;
    c.N = pow(c.D, static_cast<unsigned long>(cfg.s));
    c.M = c.N * c.D;
    return c;
}

Factored Factored::of(const BigInt& n) {
    if (n < 1) throw ClassifierError("only positive integers can be factored");
    Factored out;
    BigInt rest = n;
    for (unsigned long p = 2; p < 1000 && rest > 1; ++p) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.powers_[BigInt(p)] += e;
    }
    if (rest > 1) out.powers_[rest] += 1;
    return out;
}

Factored& Factored::operator*=(const Factored& o) {
    for (const auto& [base, e] : o.powers_) powers_[base] += e;
    return *this;
}

Factored Factored::pow(unsigned long e) const {
    Factored out;
    if (e == 0) return out;
    for (const auto& [base, k] : powers_) out.powers_[base] = k * e;
    return out;
}

BigInt Factored::value() const {
    BigInt v = 1;
    for (const auto& [base, e] : powers_) v *= turan::pow(base, e);
    return v;
}

Factored factored_f(int j, const ThresholdConfig& cfg) {
    check_config(cfg);
    if (j < 1) throw ClassifierError("j must be at least 1");
    Factored f = Factored::of(cfg.L);
    for (int i = 2; i <= j; ++i) {
        const Factored d = Factored::of(2) * Factored::of(cfg.K).pow(static_cast<unsigned long>(i)) *
                           Factored::of(cfg.L) * f.pow(2);
        f = Factored::of(10) * Factored::of(i).pow(4) * d.pow(static_cast<unsigned long>(cfg.s + 3));
    }
    return f;
}

FactoredConstants factored_constants(int j, const ThresholdConfig& cfg) {
    if (j < 2) throw ClassifierError("derived constants need j >= 2");
    const Factored prev = factored_f(j - 1, cfg);
    FactoredConstants c;
    c.D = Factored::of(2) * Factored::of(cfg.K).pow(static_cast<unsigned long>(j)) * Factored::of(cfg.L) * prev.pow(2);
    c.N = c.D.pow(static_cast<unsigned long>(cfg.s));
    c.M = c.N * c.D;
    return c;
}

bool check_f_gap(int j, const ThresholdConfig& cfg) {
    if (j < 2) throw ClassifierError("the gap needs j >= 2");
    const auto f = f_table(j, cfg);
    const BigInt& prev = f[static_cast<std::size_t>(j - 1)];
    const BigInt floor = std::max(BigInt(2 * cfg.L * cfg.L), prev);
    return f[static_cast<std::size_t>(j)] >= BigInt(j * j) * prev * prev * floor;
}

std::vector<BigInt> ThresholdConfig::thresholds(int j_max) const {
    check_config(*this);
    if (j_max < 1) throw ClassifierError("j_max must be at least 1");
    for (const auto& [j, t] : overrides) {
        if (j < 1) throw ClassifierError("threshold override at length " + std::to_string(j));
        if (t < 1) throw ClassifierError("threshold overrides must be positive");
    }
    int need_f = 0;
    for (int j = 1; j <= j_max; ++j) {
        if (!overrides.contains(j)) need_f = j;
    }
    std::vector<BigInt> f = need_f > 0 ? f_table(need_f, *this) : std::vector<BigInt>{};
    std::vector<BigInt> out(static_cast<std::size_t>(j_max) + 1);
    for (int j = 1; j <= j_max; ++j) {
        auto it = overrides.find(j);
        out[static_cast<std::size_t>(j)] = it != overrides.end() ? it->second : f[static_cast<std::size_t>(j)];
        if (j > 1 && out[static_cast<std::size_t>(j)] < out[static_cast<std::size_t>(j - 1)]) {
            throw ClassifierError("thresholds must be nondecreasing in j");
        }
    }
    return out;
}

const char* to_string(Status s) {
    switch (s) {
        case Status::None: return "none";
        case Status::Light: return "light";
        case Status::Heavy: return "heavy";
    }
    return "none";
}

PathClassification::PathClassification(int order, int j_max, std::vector<BigInt> thresholds)
    : n_(order), j_max_(j_max), thresholds_(std::move(thresholds)),
      buckets_(static_cast<std::size_t>(j_max + 1) * static_cast<std::size_t>(order * order)) {}

std::size_t PathClassification::index(int j, int x, int y) const {
    if (j < 1 || j > j_max_) throw ClassifierError("length " + std::to_string(j) + " not classified");
    if (x < 0 || y < 0 || x >= n_ || y >= n_) throw ClassifierError("vertex out of range");
    if (x > y) std::swap(x, y);
    return (static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
}

std::vector<Path>& PathClassification::bucket(int j, int x, int y) { return buckets_[index(j, x, y)]; }

const std::vector<Path>& PathClassification::admissible(int j, int x, int y) const {
    return buckets_[index(j, x, y)];
}

Status PathClassification::status(int j, int x, int y) const {
    const std::uint64_t c = count(j, x, y);
    if (c == 0) return Status::None;
    if (j == 1) return Status::Light;
    return BigInt(static_cast<unsigned long>(c)) >= threshold(j) ? Status::Heavy : Status::Light;
}

bool PathClassification::is_admissible(const Path& p) const {
    const int j = static_cast<int>(p.size()) - 1;
    if (j < 1 || j > j_max_) throw ClassifierError("path length outside 1..j_max");
    VertexSet seen;
    for (int v : p) {
        if (v < 0 || v >= n_ || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < j; ++i) {
        if (count(1, p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]) == 0) return false;
    }
    for (int len = 2; len < j; ++len) {
        for (int start = 0; start + len <= j; ++start) {
            if (status(len, p[static_cast<std::size_t>(start)], p[static_cast<std::size_t>(start + len)]) != Status::Light) {
                return false;
            }
        }
    }
    return true;
}

bool PathClassification::is_light(const Path& p) const {
    if (!is_admissible(p)) return false;
    return status(static_cast<int>(p.size()) - 1, p.front(), p.back()) == Status::Light;
}

nlohmann::json PathClassification::to_json() const {
    nlohmann::json thresholds = nlohmann::json::array();
    for (int j = 1; j <= j_max_; ++j) thresholds.push_back(turan::to_string(threshold(j)));
    nlohmann::json entries = nlohmann::json::array();
    for (int j = 1; j <= j_max_; ++j) {
        for (int x = 0; x < n_; ++x) {
            for (int y = x + 1; y < n_; ++y) {
                const auto c = count(j, x, y);
                if (c == 0) continue;
                entries.push_back({{"pair", {x, y}}, {"j", j}, {"count", c}, {"status", to_string(status(j, x, y))}});
            }
        }
    }
    return {{"schema", "turan-lab/1"}, {"j_max", j_max_}, {"thresholds", thresholds}, {"paths", entries}};
}

PathClassification classify_paths(const Graph& g, int j_max, const ThresholdConfig& cfg, std::uint64_t budget) {
    if (j_max < 1 || j_max > 6) throw ClassifierError("j_max must be in 1..6");
    PathClassification pc(g.order(), j_max, cfg.thresholds(j_max));
    for (auto [u, v] : g.edges()) pc.bucket(1, u, v).push_back({u, v});

    Path path;
    for (int j = 2; j <= j_max; ++j) {
        // Every prefix of an admissible path has only light subpaths, so extension stops early.
        auto extend = [&](auto&& self, VertexSet used) -> void {
            const int len = static_cast<int>(path.size()) - 1;
            if (len == j) {
                if (path.front() < path.back()) pc.bucket(j, path.front(), path.back()).push_back(path);
                return;
            }
            (g.neighbors(path.back()) - used).for_each([&](int v) {
                if (++pc.steps_ > budget) throw ClassifierError("path enumeration budget exceeded");
                path.push_back(v);
                const int now = len + 1;
                bool ok = true;
                for (int l = 2; l <= std::min(now, j - 1) && ok; ++l) {
                    ok = pc.status(l, path[static_cast<std::size_t>(now - l)], v) == Status::Light;
                }
                if (ok) self(self, used | VertexSet::single(v));
                path.pop_back();
            });
        };
        for (int x = 0; x < g.order(); ++x) {
            path.assign(1, x);
            extend(extend, VertexSet::single(x));
        }
    }
    return pc;
}

std::vector<int> SpiderEmbedding::leaves() const {
    std::vector<int> out;
    for (const auto& leg : legs) out.push_back(leg.back());
    return out;
}

std::vector<int> SpiderEmbedding::lengths() const {
    std::vector<int> out;
    for (const auto& leg : legs) out.push_back(static_cast<int>(leg.size()) - 1);
    return out;
}

std::vector<std::vector<int>> leg_truncations(const std::vector<int>& lengths) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(lengths.size(), 1);
    while (true) {
        if (cur != lengths) out.push_back(cur);
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == lengths[i]) cur[i++] = 1;
        if (i == cur.size()) break;
        ++cur[i];
    }
    return out;
}

namespace {

int total(const std::vector<int>& v) {
    int t = 0;
    for (int x : v) t += x;
    return t;
}

bool height_one(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
}

const std::vector<SpiderEmbedding> kNoSpiders;

}  // namespace

const SpiderClassification::Bucket& SpiderClassification::bucket(const std::vector<int>& lengths) const {
    auto it = buckets_.find(lengths);
    if (it == buckets_.end()) throw ClassifierError("length vector not classified");
    return it->second;
}

const std::vector<SpiderEmbedding>& SpiderClassification::admissible(const std::vector<int>& lengths,
                                                                     const std::vector<int>& leaves) const {
    const auto& b = bucket(lengths);
    auto it = b.find(leaves);
    return it == b.end() ? kNoSpiders : it->second;
}

Status SpiderClassification::status(const std::vector<int>& lengths, const std::vector<int>& leaves) const {
    const std::uint64_t c = count(lengths, leaves);
    if (c == 0) return Status::None;
    if (height_one(lengths) && policy_ == HeightOnePolicy::AlwaysLight) return Status::Light;
    return BigInt(static_cast<unsigned long>(c)) >= thresholds_.at(lengths) ? Status::Heavy : Status::Light;
}

nlohmann::json SpiderClassification::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [leaves, spiders] : bucket(lengths())) {
        entries.push_back({{"leaves", leaves},
                           {"count", spiders.size()},
                           {"status", to_string(status(lengths(), leaves))}});
    }
    return {{"schema", "turan-lab/1"},
            {"lengths", lengths()},
            {"threshold", turan::to_string(thresholds_.at(lengths()))},
            {"spiders", entries}};
}

SpiderClassification classify_spiders(const Graph& g, const std::vector<int>& lengths, const ThresholdConfig& cfg,
                                      const PathClassification& pc, const SpiderOptions& options) {
    if (lengths.size() < 2) throw ClassifierError("a spider needs at least 2 legs");
    for (int l : lengths) {
        if (l < 1) throw ClassifierError("leg lengths must be positive");
        if (l > pc.j_max()) throw ClassifierError("path classification does not cover leg length " + std::to_string(l));
    }
    if (pc.order() != g.order()) throw ClassifierError("path classification is for a different graph");

    // Close the requested vector under the sub-spider rule.
    std::set<std::vector<int>> seen{lengths};
    std::vector<std::vector<int>> todo{lengths};
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (auto& u : options.sub_spiders(v)) {
            if (u.size() != v.size() || u == v) throw ClassifierError("sub-spider rule returned an invalid vector");
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (u[i] < 1 || u[i] > v[i]) throw ClassifierError("sub-spider rule returned an invalid vector");
            }
            if (seen.insert(u).second) todo.push_back(u);
        }
    }
    std::vector<std::vector<int>> order(seen.begin(), seen.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return total(a) < total(b); });

    SpiderClassification sc;
    sc.policy_ = options.height_one;
    int longest_total = 0;
    for (const auto& v : order) longest_total = std::max(longest_total, total(v));
    const auto thresholds = cfg.thresholds(longest_total);
    for (const auto& v : order) sc.thresholds_[v] = thresholds[static_cast<std::size_t>(total(v))];

    // Light legs from each center, oriented outward.
    const int n = g.order();
    std::vector<std::vector<std::vector<Path>>> light(static_cast<std::size_t>(pc.j_max()) + 1,
                                                      std::vector<std::vector<Path>>(static_cast<std::size_t>(n)));
    for (int l = 1; l <= pc.j_max(); ++l) {
        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                if (pc.status(l, x, y) != Status::Light) continue;
                for (const auto& p : pc.admissible(l, x, y)) {
                    light[static_cast<std::size_t>(l)][static_cast<std::size_t>(x)].push_back(p);
                    light[static_cast<std::size_t>(l)][static_cast<std::size_t>(y)].emplace_back(p.rbegin(), p.rend());
                }
            }
        }
    }

    std::uint64_t steps = 0;
    for (const auto& v : order) {
        auto& out = sc.buckets_[v];
        const auto subs = options.sub_spiders(v);
        SpiderEmbedding cur;
        auto sub_light = [&]() {
            for (const auto& u : subs) {
                if (height_one(u) && options.height_one == HeightOnePolicy::AlwaysLight) continue;
                std::vector<int> leaves;
                for (std::size_t i = 0; i < u.size(); ++i) leaves.push_back(cur.legs[i][static_cast<std::size_t>(u[i])]);
                if (sc.status(u, leaves) != Status::Light) return false;
            }
            return true;
        };
        auto place = [&](auto&& self, std::size_t leg, VertexSet used) -> void {
            if (leg == v.size()) {
                if (sub_light()) out[cur.leaves()].push_back(cur);
                return;
            }
            for (const auto& p : light[static_cast<std::size_t>(v[leg])][static_cast<std::size_t>(cur.center)]) {
                if (++steps > options.budget) throw ClassifierError("spider enumeration budget exceeded");
                VertexSet body;
                for (std::size_t i = 1; i < p.size(); ++i) body.insert(p[i]);
                if (!(body & used).empty()) continue;
                cur.legs.push_back(p);
                self(self, leg + 1, used | body);
                cur.legs.pop_back();
            }
        };
        for (int c = 0; c < n; ++c) {
            cur.center = c;
            cur.legs.clear();
            place(place, 0, VertexSet::single(c));
        }
    }
    sc.order_ = std::move(order);
    sc.requested_ = lengths;
    return sc;
}

}  // namespace turan
