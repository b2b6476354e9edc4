#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/rational.hpp"

namespace turan {

class ExponentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 1 + p/(kp + b). Requires p >= 1 and k >= b >= 1.
Rational sparse_exponent(long p, long k, long b);

/// Maps 2 - a/b to 2 - a/(a + b). Requires e in (1, 2).
Rational kkl_reduce(const Rational& e);

/// 2 - (kp + b)/(s(kp + b) + p). Requires b, p, s >= 1 and k >= max(0, b - 1).
///
/// Computed as sparse_exponent(p, k + 1, b) followed by s - 1 reductions; throws
/// std::logic_error if that chain disagrees with the closed form.
Rational dense_exponent(long b, long p, long s, long k);

/// The closed form of dense_exponent without the reduction chain.
Rational dense_exponent_closed_form(long b, long p, long s, long k);

enum class StepKind { SpiderBase, KklStep, DenseBase, ModularDecomposition };

/// One link of a derivation. Which parameters are meaningful depends on `kind`:
///
///   SpiderBase            p, k, b         yields 1 + p/(kp+b)
///   KklStep               a, b            2 - a/b  ->  2 - a/(a+b)
///   DenseBase             p, k, b, s      asserts the input equals 2 - (kp+b)/(s(kp+b)+p)
///   ModularDecomposition  p, q, s, r, k, b
///       q = sp + r, p = kr + b, 0 < r, r^2 <= p, k >= r - 1, r >= b >= 1;
///       the input 2 - (kr+b)/(s(kr+b)+r) is restated as 2 - p/q
struct DerivationStep {
    StepKind kind = StepKind::SpiderBase;
    long p = 0, q = 0, k = 0, b = 0, s = 0, a = 0, r = 0;
    std::optional<Rational> input;
    Rational output;
};

enum class Verdict { Covered, NotCovered };

/// Which argument produced a covered verdict.
enum class Route { None, SparseSpider, ModularDecomposition, CompleteBipartite, DenseChain };

struct ExponentCertificate {
    Rational target;
    Verdict verdict = Verdict::NotCovered;
    Route route = Route::None;
    std::vector<DerivationStep> steps;
};

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Recomputes every step from its parameters and checks the chain links up and ends at the
/// target. Returns the final value; throws CertificateError on the first inconsistency.
Rational replay(const ExponentCertificate& cert);
bool replays(const ExponentCertificate& cert);

/// Finds a certificate for `target` in (1, 2), trying the routes in the order
/// sparse spider, modular decomposition, dense chain. Throws ExponentError outside (1, 2).
ExponentCertificate certify(const Rational& target);

std::optional<ExponentCertificate> certify_sparse(const Rational& target);
std::optional<ExponentCertificate> certify_modular(const Rational& target);
std::optional<ExponentCertificate> certify_dense_chain(const Rational& target);
/// 2 - 1/m for m >= 2, derived from 3/2 by m - 2 reductions.
ExponentCertificate complete_bipartite_certificate(long m);

/// (s, r, k, b) with q = sp + r, p = kr + b, 0 < r, r^2 <= p, k >= r - 1, r >= b >= 1.
struct ModularParameters {
    long s = 0, r = 0, k = 0, b = 0;
};
/// Decomposes a (not necessarily reduced) pair p < q; nullopt when r = 0 or r^2 > p.
std::optional<ModularParameters> modular_decomposition(long p, long q);

std::string to_string(StepKind kind);
std::string to_string(Verdict v);
std::string to_string(Route r);

nlohmann::json to_json(const DerivationStep& step);
nlohmann::json to_json(const ExponentCertificate& cert);
/// Inverse of to_json; throws CertificateError on malformed input.
ExponentCertificate certificate_from_json(const nlohmann::json& j);

struct AtlasRow {
    Rational target;
    ExponentCertificate certificate;
};

/// Every reduced fraction in (1, 2) with denominator <= max_den, ascending, with its certificate.
std::vector<AtlasRow> exponent_atlas(long max_den);

/// CSV with header "target,verdict,route,parameters" preceded by a schema comment line.
std::string atlas_csv(const std::vector<AtlasRow>& rows);

struct RegularityConstants {
    long s = 0, b = 0, k = 0;
    /// (s-1)/((s-1)k + b)
    Rational epsilon;
    /// ceil(20 * 2^(1/epsilon^2 + 1))
    BigInt K;
};

RegularityConstants regularity_constants(long s, long b, long k);

}  // namespace turan
