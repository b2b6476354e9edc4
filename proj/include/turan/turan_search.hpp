#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "turan/family_spec.hpp"
#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

class SearchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxSearchOrder = 12;
inline constexpr int kMaxOracleOrder = 7;

struct SearchOptions {
    int threads = 1;
};

struct SearchResult {
    int n = 0;
    std::string h_spec;
    int ex_value = 0;
    /// An H-free graph on n vertices with ex_value edges.
    Graph witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> wall_time{};
};

/// ex(n, H): the maximum number of edges in an H-free graph on n vertices.
///
/// Branch and bound over the upper-triangle edge slots, row by row. A branch is cut when
/// adding its edge creates a copy of H through that edge, or when the edges decided so far
/// plus the best possible completion cannot beat the incumbent. Completions are bounded by
/// ex(m, H) of the undecided tail (computed recursively) and by a degree cap: vertices are
/// restricted to non-increasing degree order, which every graph admits after relabelling.
SearchResult turan_number(int n, const Family& h, const SearchOptions& options = {});
SearchResult turan_number(int n, const Graph& h, const SearchOptions& options = {});

/// Maximum edge count over every labelled graph on n <= 7 vertices that avoids H.
int naive_turan_oracle(int n, const Graph& h);

struct ExTable {
    std::vector<std::pair<int, int>> rows;
    /// Least-squares slope of ln(ex) against ln(n) over rows with ex > 0. Diagnostic only.
    std::optional<double> slope;
    std::optional<Rational> slope_approx;
};

ExTable ex_table(const Family& h, int n_lo, int n_hi, const SearchOptions& options = {});

/// Best rational approximation of x with denominator at most max_den.
Rational approximate(double x, long max_den);

nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const ExTable& t);

}  // namespace turan
