#include "turan/turan_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "turan/containment.hpp"
#include "turan/graph_io.hpp"

namespace turan {

namespace {

struct Slot {
    int row;
    int col;
};

struct State {
    Graph g;
    std::array<int, kMaxSearchOrder> degree{};
    int edges = 0;
    std::size_t next = 0;
};

/// Shared between workers. The incumbent only ever grows.
struct Incumbent {
    std::atomic<int> best{0};
    std::mutex mu;
    Graph witness;

    void offer(const Graph& g, int edges) {
        std::lock_guard lock(mu);
        if (edges > best.load()) {
            witness = g;
            best.store(edges);
        }
    }
};

class BranchAndBound {
public:
    BranchAndBound(int n, const Pattern& pattern, std::vector<int> smaller_ex, int upper_bound, Incumbent& incumbent)
        : n_(n), pattern_(pattern), smaller_ex_(std::move(smaller_ex)), upper_bound_(upper_bound), inc_(incumbent) {
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) slots_.push_back({r, c});
    }

    State root() const {
        State st;
        st.g = Graph(n_);
        return st;
    }

    /// Depth-first from `st`; returns the number of nodes visited.
    std::uint64_t explore(State& st) {
        std::uint64_t nodes = 0;
        dfs(st, nodes);
        return nodes;
    }

    /// Expands the tree breadth-first until at least `want` open states exist.
    std::vector<State> split(int want, std::uint64_t& nodes) {
        std::vector<State> frontier{root()};
        while (static_cast<int>(frontier.size()) < want) {
            std::vector<State> next;
            bool grew = false;
            for (auto& st : frontier) {
                ++nodes;
                if (st.next == slots_.size() || !viable(st)) {
                    if (st.next == slots_.size() && viable(st)) leaf(st);
                    continue;
                }
                grew = true;
                for (auto& child : children(st)) next.push_back(std::move(child));
            }
            frontier = std::move(next);
            if (!grew) break;
        }
        return frontier;
    }

    bool done() const { return inc_.best.load() >= upper_bound_; }

private:
    int cap(const State& st, int row) const { return row == 0 ? n_ - 1 : st.degree[static_cast<std::size_t>(row - 1)]; }

    /// Row r is complete once every slot of rows <= r is decided.
    bool rows_done_before(const State& st, int row) const {
        return st.next == slots_.size() || slots_[st.next].row >= row;
    }

    /// Degree order and completion bounds.
    bool viable(const State& st) const {
        const int row = st.next == slots_.size() ? n_ : slots_[st.next].row;
        // Vertices 0..row-1 have final degrees; they must be non-increasing.
        for (int v = 1; v < std::min(row, n_); ++v) {
            if (st.degree[static_cast<std::size_t>(v)] > st.degree[static_cast<std::size_t>(v - 1)]) return false;
        }
        if (st.next == slots_.size()) {
            for (int v = 1; v < n_; ++v) {
                if (st.degree[static_cast<std::size_t>(v)] > st.degree[static_cast<std::size_t>(v - 1)]) return false;
            }
            return true;
        }
        const int best = inc_.best.load();
        const int row_left = n_ - 1 - slots_[st.next].col + 1;
        const int tail = n_ - row - 1;
        if (st.edges + row_left + smaller_ex_[static_cast<std::size_t>(tail)] <= best) return false;

        const int c = cap(st, row);
        long degree_sum = 0;
        for (int v = 0; v < row; ++v) degree_sum += st.degree[static_cast<std::size_t>(v)];
        for (int v = row; v < n_; ++v) {
            if (st.degree[static_cast<std::size_t>(v)] > c) return false;
            degree_sum += c;
        }
        return degree_sum / 2 > best;
    }

    std::vector<State> children(const State& st) const {
        std::vector<State> out;
        const Slot s = slots_[st.next];
        if (can_add(st, s)) {
            State a = st;
            add(a, s);
            if (!pattern_.found_through_edge(a.g, s.row, s.col)) {
                ++a.next;
                out.push_back(std::move(a));
            }
        }
        State b = st;
        ++b.next;
        out.push_back(std::move(b));
        return out;
    }

    bool can_add(const State& st, Slot s) const {
        const int c = cap(st, s.row);
        return st.degree[static_cast<std::size_t>(s.row)] < c && st.degree[static_cast<std::size_t>(s.col)] < c;
    }

    static void add(State& st, Slot s) {
        st.g.add_edge(s.row, s.col);
        ++st.degree[static_cast<std::size_t>(s.row)];
        ++st.degree[static_cast<std::size_t>(s.col)];
        ++st.edges;
    }

    static void remove(State& st, Slot s) {
        st.g.remove_edge(s.row, s.col);
        --st.degree[static_cast<std::size_t>(s.row)];
        --st.degree[static_cast<std::size_t>(s.col)];
        --st.edges;
    }

    void leaf(const State& st) {
        if (st.edges > inc_.best.load()) inc_.offer(st.g, st.edges);
    }

    void dfs(State& st, std::uint64_t& nodes) {
        ++nodes;
        if (done() || !viable(st)) return;
        if (st.next == slots_.size()) {
            leaf(st);
            return;
        }
        const Slot s = slots_[st.next];
        ++st.next;
        if (can_add(st, s)) {
            add(st, s);
            if (!pattern_.found_through_edge(st.g, s.row, s.col)) dfs(st, nodes);
            remove(st, s);
        }
        dfs(st, nodes);
        --st.next;
    }

    int n_;
    const Pattern& pattern_;
    std::vector<int> smaller_ex_;
    int upper_bound_;
    Incumbent& inc_;
    std::vector<Slot> slots_;
};

void check_pattern(const Graph& h) {
    if (h.order() < 2) throw SearchError("forbidden graph needs at least 2 vertices");
    if (!h.is_connected()) throw SearchError("forbidden graph must be connected");
}

SearchResult search(int n, const Family& family, const SearchOptions& options, std::vector<SearchResult>& memo) {
    const auto start = std::chrono::steady_clock::now();
    const Graph& h = family.graph;
    SearchResult result;
    result.n = n;
    result.h_spec = family.descriptor;

    if (n <= 1) {
        result.witness = Graph(n);
        memo.push_back(result);
        return result;
    }

    // Smaller orders first: they seed the incumbent and bound the undecided tail.
    std::vector<int> smaller_ex;
    for (int m = 0; m < n; ++m) smaller_ex.push_back(memo.at(static_cast<std::size_t>(m)).ex_value);
    const SearchResult& prev = memo.back();
    const int all = n * (n - 1) / 2;
    int upper = all;
    if (n >= 3) upper = std::min<long>(upper, static_cast<long>(n) * prev.ex_value / (n - 2));

    Incumbent inc;
    inc.witness = Graph(n);
    for (auto [u, v] : prev.witness.edges()) inc.witness.add_edge(u, v);
    inc.best.store(prev.ex_value);

    Pattern pattern(h);
    BranchAndBound bb(n, pattern, smaller_ex, upper, inc);
    std::uint64_t nodes = 0;
    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        State st = bb.root();
        nodes = bb.explore(st);
    } else {
        std::vector<State> tasks = bb.split(threads * 16, nodes);
        std::atomic<std::size_t> cursor{0};
        std::atomic<std::uint64_t> shared_nodes{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                BranchAndBound local(n, pattern, smaller_ex, upper, inc);
                std::uint64_t mine = 0;
                for (std::size_t i = cursor++; i < tasks.size(); i = cursor++) mine += local.explore(tasks[i]);
                shared_nodes += mine;
            });
        }
        for (auto& th : pool) th.join();
        nodes += shared_nodes.load();
    }

    result.ex_value = inc.best.load();
    result.witness = inc.witness;
    result.nodes_explored = nodes;

    if (result.witness.edge_count() != result.ex_value || contains(result.witness, h) ||
        (family.blowup && contains_blowup(result.witness, *family.blowup))) {
        throw std::logic_error("turan search produced an invalid witness");
    }
    result.wall_time = std::chrono::steady_clock::now() - start;
    memo.push_back(result);
    return result;
}

}  // namespace

SearchResult turan_number(int n, const Family& h, const SearchOptions& options) {
    if (n < 1 || n > kMaxSearchOrder) {
        throw SearchError("n = " + std::to_string(n) + " outside the supported range 1..12");
    }
    check_pattern(h.graph);
    const auto start = std::chrono::steady_clock::now();
    std::vector<SearchResult> memo;
    std::uint64_t nodes = 0;
    for (int m = 0; m <= n; ++m) nodes += search(m, h, options, memo).nodes_explored;
    SearchResult out = memo.back();
    out.nodes_explored = nodes;
    out.wall_time = std::chrono::steady_clock::now() - start;
    return out;
}

SearchResult turan_number(int n, const Graph& h, const SearchOptions& options) {
    Family f;
    f.descriptor = "g6:" + to_graph6(h);
    f.graph = h;
    return turan_number(n, f, options);
}

int naive_turan_oracle(int n, const Graph& h) {
    if (n < 0 || n > kMaxOracleOrder) throw SearchError("naive oracle supports n <= 7");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    int best = 0;
    const std::uint32_t total = 1U << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const int edges = std::popcount(mask);
        if (edges <= best) continue;
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
        }
        if (!find_embedding(g, h)) best = edges;
    }
    return best;
}

Rational approximate(double x, long max_den) {
    // Continued-fraction convergents, stopping before the denominator bound.
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(rest);
        const long ai = static_cast<long>(a);
        const long p2 = ai * p1 + p0;
        const long q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (rest - a < 1e-12) break;
        rest = 1.0 / (rest - a);
    }
    Rational r(BigInt(p1), BigInt(q1 == 0 ? 1 : q1));
    r.canonicalize();
    return r;
}

ExTable ex_table(const Family& h, int n_lo, int n_hi, const SearchOptions& options) {
    if (n_lo < 1 || n_hi < n_lo) throw SearchError("empty or invalid n range");
    ExTable table;
    for (int n = n_lo; n <= n_hi; ++n) table.rows.emplace_back(n, turan_number(n, h, options).ex_value);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (auto [n, ex] : table.rows) {
        if (ex <= 0) continue;
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(static_cast<double>(ex));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    if (count >= 2 && denom > 0) {
        table.slope = (count * sxy - sx * sy) / denom;
        table.slope_approx = approximate(*table.slope, 1000);
    }
    return table;
}

nlohmann::json to_json(const SearchResult& r) {
    return {{"schema", "turan-lab/1"},
            {"n", r.n},
            {"h", r.h_spec},
            {"ex", r.ex_value},
            {"witness", to_graph6(r.witness)},
            {"nodes_explored", r.nodes_explored},
            {"wall_time_seconds", r.wall_time.count()}};
}

nlohmann::json to_json(const ExTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto [n, ex] : t.rows) rows.push_back({{"n", n}, {"ex", ex}});
    nlohmann::json j{{"schema", "turan-lab/1"}, {"rows", rows}};
    j["fitted_slope"] = t.slope_approx ? nlohmann::json(to_string(*t.slope_approx)) : nlohmann::json(nullptr);
    return j;
}

}  // namespace turan
