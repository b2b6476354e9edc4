#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

class ClassifierError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters of the threshold function f(j, L).
///
/// With no overrides every threshold is f(j, L). Overrides replace f at the listed lengths;
/// lengths without an override keep f(j, L).
struct ThresholdConfig {
    BigInt L = 1;
    int s = 2;
    BigInt K = 1;
    std::map<int, BigInt> overrides;

    bool uses_f_only() const { return overrides.empty(); }
    /// Effective thresholds for lengths 1..j_max; index 0 is unused.
    /// Throws ClassifierError unless they are positive and nondecreasing.
    std::vector<BigInt> thresholds(int j_max) const;
};

/// f(1, L) = L and f(j, L) = 10 j^4 (2 K^j L f(j-1, L)^2)^(s+3).
BigInt compute_f(int j, const ThresholdConfig& cfg);
/// f(1..j_max) in one pass; index 0 is unused.
std::vector<BigInt> f_table(int j_max, const ThresholdConfig& cfg);

struct DerivedConstants {
    BigInt D;  ///< 2 K^j L f(j-1, L)^2
    BigInt M;  ///< D^(s+1)
    BigInt N;  ///< D^s
};

/// Requires j >= 2.
DerivedConstants derived_constants(int j, const ThresholdConfig& cfg);

/// A positive integer kept as a product of powers. Equal maps mean equal values.
class Factored {
public:
    Factored() = default;
    /// Splits off primes below 1000; any cofactor above 1 becomes its own base. Requires n >= 1.
    static Factored of(const BigInt& n);

    Factored& operator*=(const Factored& o);
    friend Factored operator*(Factored a, const Factored& b) { return a *= b; }
    Factored pow(unsigned long e) const;
    BigInt value() const;
    const std::map<BigInt, unsigned long>& powers() const { return powers_; }
    bool operator==(const Factored&) const = default;

private:
    std::map<BigInt, unsigned long> powers_;
};

/// f(j, L) in factored form.
Factored factored_f(int j, const ThresholdConfig& cfg);

struct FactoredConstants {
    Factored D, M, N;
};

/// D, M and N in factored form. Requires j >= 2.
FactoredConstants factored_constants(int j, const ThresholdConfig& cfg);

/// f(j) >= j^2 f(j-1)^2 max(2 L^2, f(j-1)), exactly. Requires j >= 2.
bool check_f_gap(int j, const ThresholdConfig& cfg);

enum class Status { None, Light, Heavy };
const char* to_string(Status s);

/// A simple path as its vertex sequence.
using Path = std::vector<int>;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Admissible path counts for every vertex pair and length 1..j_max.
///
/// An edge is 1-admissible and 1-light. For j >= 2 a path of length j is admissible when every
/// proper subpath of length l is l-light, and an admissible path is light when its end pair has
/// fewer than threshold(j) admissible paths, heavy otherwise.
class PathClassification {
public:
    PathClassification(int order, int j_max, std::vector<BigInt> thresholds);

    int order() const { return n_; }
    int j_max() const { return j_max_; }
    const BigInt& threshold(int j) const { return thresholds_.at(static_cast<std::size_t>(j)); }
    const std::vector<BigInt>& thresholds() const { return thresholds_; }

    /// Admissible paths between x and y, oriented from min(x, y). Empty when x == y.
    const std::vector<Path>& admissible(int j, int x, int y) const;
    std::uint64_t count(int j, int x, int y) const { return admissible(j, x, y).size(); }
    Status status(int j, int x, int y) const;

    /// Whether p (in either orientation) is admissible, from the stored counts of its subpaths.
    bool is_admissible(const Path& p) const;
    bool is_light(const Path& p) const;

    std::uint64_t steps() const { return steps_; }

    nlohmann::json to_json() const;

private:
    friend PathClassification classify_paths(const Graph&, int, const ThresholdConfig&, std::uint64_t);

    std::vector<Path>& bucket(int j, int x, int y);
    std::size_t index(int j, int x, int y) const;

    int n_;
    int j_max_;
    std::vector<BigInt> thresholds_;
    std::vector<std::vector<Path>> buckets_;
    std::uint64_t steps_ = 0;
};

/// Lengths are processed in increasing order. Throws ClassifierError when more than `budget`
/// path extensions would be needed.
PathClassification classify_paths(const Graph& g, int j_max, const ThresholdConfig& cfg,
                                  std::uint64_t budget = kDefaultBudget);

/// A spider placed in a host graph. Leg i runs from the center to leaf i.
struct SpiderEmbedding {
    int center = -1;
    std::vector<Path> legs;

    std::vector<int> leaves() const;
    std::vector<int> lengths() const;
    bool operator==(const SpiderEmbedding&) const = default;
};

/// Length vectors of the proper sub-spiders of a spider with the given legs.
using SubSpiderRule = std::function<std::vector<std::vector<int>>(const std::vector<int>&)>;

/// Every componentwise truncation with all legs >= 1 and at least one leg shorter.
std::vector<std::vector<int>> leg_truncations(const std::vector<int>& lengths);

enum class HeightOnePolicy {
    /// A height-1 spider is heavy when its leaf vector has at least threshold(s) of them.
    ByCount,
    /// Every height-1 spider is light.
    AlwaysLight,
};

struct SpiderOptions {
    HeightOnePolicy height_one = HeightOnePolicy::ByCount;
    /// Must return vectors componentwise <= its argument, each entry >= 1.
    SubSpiderRule sub_spiders = leg_truncations;
    std::uint64_t budget = kDefaultBudget;
};

/// Admissible spiders bucketed by (length vector, ordered leaf vector).
class SpiderClassification {
public:
    using Bucket = std::map<std::vector<int>, std::vector<SpiderEmbedding>>;

    /// The requested vector and its sub-spider vectors, in processing order.
    const std::vector<std::vector<int>>& length_vectors() const { return order_; }
    const std::vector<int>& lengths() const { return requested_; }

    const Bucket& bucket(const std::vector<int>& lengths) const;
    const std::vector<SpiderEmbedding>& admissible(const std::vector<int>& lengths,
                                                   const std::vector<int>& leaves) const;
    std::uint64_t count(const std::vector<int>& lengths, const std::vector<int>& leaves) const {
        return admissible(lengths, leaves).size();
    }
    Status status(const std::vector<int>& lengths, const std::vector<int>& leaves) const;

    nlohmann::json to_json() const;

private:
    friend SpiderClassification classify_spiders(const Graph&, const std::vector<int>&, const ThresholdConfig&,
                                                 const PathClassification&, const SpiderOptions&);

    std::vector<std::vector<int>> order_;
    std::vector<int> requested_;
    std::map<std::vector<int>, Bucket> buckets_;
    std::map<std::vector<int>, BigInt> thresholds_;
    HeightOnePolicy policy_ = HeightOnePolicy::ByCount;
};

/// Length vectors are processed in increasing total length. A spider is admissible when every
/// leg is a light path and every proper sub-spider (same center, legs cut back per the rule,
/// at its own leaf vector) is light. Requires pc.j_max() >= the longest leg.
SpiderClassification classify_spiders(const Graph& g, const std::vector<int>& lengths, const ThresholdConfig& cfg,
                                      const PathClassification& pc, const SpiderOptions& options = {});

}  // namespace turan
