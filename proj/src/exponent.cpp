#include "turan/exponent.hpp"

#include <numeric>
#include <sstream>

namespace turan {

namespace {

constexpr const char* kSchema = "turan-lab/1";

Rational reduced(Rational r) {
    r.canonicalize();
    return r;
}

bool in_open_unit_interval_shifted(const Rational& e) { return e > 1 && e < 2; }

/// (a, b) with e = 2 - a/b in lowest terms.
std::pair<BigInt, BigInt> dense_form(const Rational& e) {
    const Rational gap = reduced(2 - e);
    return {gap.get_num(), gap.get_den()};
}

/// (p, q) with e = 1 + p/q in lowest terms.
std::pair<BigInt, BigInt> sparse_form(const Rational& e) {
    const Rational gap = reduced(e - 1);
    return {gap.get_num(), gap.get_den()};
}

long to_long(const BigInt& v) {
    if (!v.fits_slong_p()) throw ExponentError("parameter too large: " + v.get_str());
    return v.get_si();
}

DerivationStep spider_base_step(long p, long k, long b) {
    DerivationStep st;
    st.kind = StepKind::SpiderBase;
    st.p = p;
    st.k = k;
    st.b = b;
    st.output = sparse_exponent(p, k, b);
    return st;
}

DerivationStep kkl_step(const Rational& input) {
    DerivationStep st;
    st.kind = StepKind::KklStep;
    auto [a, b] = dense_form(input);
    st.a = to_long(a);
    st.b = to_long(b);
    st.input = input;
    st.output = kkl_reduce(input);
    return st;
}

DerivationStep dense_base_step(const Rational& input, long p, long k, long b, long s) {
    DerivationStep st;
    st.kind = StepKind::DenseBase;
    st.p = p;
    st.k = k;
    st.b = b;
    st.s = s;
    st.input = input;
    st.output = dense_exponent_closed_form(b, p, s, k);
    return st;
}

/// Spider base for 1 + p/(k'p+b), then s-1 reductions, then the dense restatement.
std::vector<DerivationStep> dense_chain_steps(long b, long p, long s, long k) {
    std::vector<DerivationStep> steps;
    steps.push_back(spider_base_step(p, k + 1, b));
    for (long i = 1; i < s; ++i) steps.push_back(kkl_step(steps.back().output));
    steps.push_back(dense_base_step(steps.back().output, p, k, b, s));
    return steps;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw CertificateError(what);
}

}  // namespace

Rational sparse_exponent(long p, long k, long b) {
    if (p < 1 || b < 1) throw ExponentError("sparse exponent needs p, b >= 1");
    if (k < b) throw ExponentError("sparse exponent needs k >= b");
    return reduced(1 + Rational(p, static_cast<long>(k * p + b)));
}

Rational kkl_reduce(const Rational& e) {
    if (!in_open_unit_interval_shifted(e)) throw ExponentError("reduction needs an exponent in (1, 2), got " + to_string(e));
    auto [a, b] = dense_form(e);
    return reduced(2 - Rational(a, a + b));
}

Rational dense_exponent_closed_form(long b, long p, long s, long k) {
    if (b < 1 || p < 1 || s < 1) throw ExponentError("dense exponent needs b, p, s >= 1");
    if (k < 0 || k < b - 1) throw ExponentError("dense exponent needs k >= b - 1 and k >= 0");
    const BigInt top = BigInt(k) * p + b;
    return reduced(2 - Rational(top, s * top + p));
}

Rational dense_exponent(long b, long p, long s, long k) {
    const Rational closed = dense_exponent_closed_form(b, p, s, k);
    Rational chain = sparse_exponent(p, k + 1, b);
    for (long i = 1; i < s; ++i) chain = kkl_reduce(chain);
    if (chain != closed) {
        throw std::logic_error("dense exponent: reduction chain " + to_string(chain) + " disagrees with closed form " +
                               to_string(closed));
    }
    return closed;
}

std::optional<ModularParameters> modular_decomposition(long p, long q) {
    if (p < 1 || q <= p) return std::nullopt;
    ModularParameters m;
    m.s = q / p;
    m.r = q % p;
    if (m.r == 0 || m.r * m.r > p) return std::nullopt;
    m.b = (p - 1) % m.r + 1;
    m.k = (p - m.b) / m.r;
    if (m.k < m.r - 1) return std::nullopt;
    return m;
}

std::optional<ExponentCertificate> certify_sparse(const Rational& target) {
    auto [pp, qq] = sparse_form(target);
    const long p = to_long(pp);
    const long q = to_long(qq);
    const long b = (q - 1) % p + 1;
    const long k = (q - b) / p;
    if (k < b) return std::nullopt;
    ExponentCertificate cert;
    cert.target = target;
    cert.verdict = Verdict::Covered;
    cert.route = Route::SparseSpider;
    cert.steps.push_back(spider_base_step(p, k, b));
    return cert;
}

ExponentCertificate complete_bipartite_certificate(long m) {
    if (m < 2) throw ExponentError("2 - 1/m needs m >= 2");
    ExponentCertificate cert;
    cert.target = reduced(2 - Rational(1, m));
    cert.verdict = Verdict::Covered;
    cert.route = Route::CompleteBipartite;
    cert.steps.push_back(spider_base_step(1, 1, 1));
    for (long i = 2; i < m; ++i) cert.steps.push_back(kkl_step(cert.steps.back().output));
    return cert;
}

std::optional<ExponentCertificate> certify_modular(const Rational& target) {
    auto [pp, qq] = dense_form(target);
    const long p = to_long(pp);
    const long q = to_long(qq);
    if (q % p == 0) {
        // Lowest terms force p = 1 here.
        return complete_bipartite_certificate(q);
    }
    auto m = modular_decomposition(p, q);
    if (!m) return std::nullopt;

    ExponentCertificate cert;
    cert.target = target;
    cert.verdict = Verdict::Covered;
    cert.route = Route::ModularDecomposition;
    cert.steps = dense_chain_steps(m->b, m->r, m->s, m->k);
    DerivationStep st;
    st.kind = StepKind::ModularDecomposition;
    st.p = p;
    st.q = q;
    st.s = m->s;
    st.r = m->r;
    st.k = m->k;
    st.b = m->b;
    st.input = cert.steps.back().output;
    st.output = reduced(2 - Rational(p, q));
    cert.steps.push_back(st);
    return cert;
}

std::optional<ExponentCertificate> certify_dense_chain(const Rational& target) {
    auto [aa, bb] = dense_form(target);
    BigInt a = aa;
    BigInt b = bb;
    long reductions = 0;
    // Undo reductions 2 - a/b <- 2 - a/(b - a) while the preimage stays in (1, 2).
    while (true) {
        const Rational current = reduced(2 - Rational(a, b));
        if (auto base = certify_sparse(current)) {
            const auto& sp = base->steps.front();
            ExponentCertificate cert;
            cert.target = target;
            cert.verdict = Verdict::Covered;
            cert.route = Route::DenseChain;
            cert.steps = dense_chain_steps(sp.b, sp.p, reductions + 1, sp.k - 1);
            return cert;
        }
        if (b - a <= a) return std::nullopt;
        b -= a;
        ++reductions;
    }
}

ExponentCertificate certify(const Rational& target) {
    if (!in_open_unit_interval_shifted(target)) {
        throw ExponentError("target " + to_string(target) + " is outside (1, 2)");
    }
    if (auto c = certify_sparse(target)) return *c;
    if (auto c = certify_modular(target)) return *c;
    if (auto c = certify_dense_chain(target)) return *c;
    ExponentCertificate none;
    none.target = target;
    return none;
}

Rational replay(const ExponentCertificate& cert) {
    require(cert.verdict == Verdict::Covered, "certificate verdict is not covered");
    require(!cert.steps.empty(), "certificate has no steps");
    std::optional<Rational> carried;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& st = cert.steps[i];
        const std::string where = "step " + std::to_string(i) + " (" + to_string(st.kind) + "): ";
        Rational out;
        try {
            switch (st.kind) {
                case StepKind::SpiderBase:
                    require(i == 0, where + "spider base must open the chain");
                    out = sparse_exponent(st.p, st.k, st.b);
                    break;
                case StepKind::KklStep: {
                    require(carried.has_value(), where + "missing input");
                    auto [a, b] = dense_form(*carried);
                    require(a == st.a && b == st.b, where + "recorded a/b does not match the input");
                    out = kkl_reduce(*carried);
                    break;
                }
                case StepKind::DenseBase:
                    require(carried.has_value(), where + "missing input");
                    out = dense_exponent_closed_form(st.b, st.p, st.s, st.k);
                    require(out == *carried, where + "closed form differs from the chained value");
                    break;
                case StepKind::ModularDecomposition: {
                    require(carried.has_value(), where + "missing input");
                    require(st.p >= 1 && st.q > st.p, where + "needs 0 < p < q");
                    require(st.q == st.s * st.p + st.r, where + "q != s*p + r");
                    require(st.p == st.k * st.r + st.b, where + "p != k*r + b");
                    require(st.r > 0 && st.r * st.r <= st.p, where + "needs 0 < r and r^2 <= p");
                    require(st.k >= st.r - 1 && st.r >= st.b && st.b >= 1, where + "needs k >= r-1 and r >= b >= 1");
                    require(dense_exponent_closed_form(st.b, st.r, st.s, st.k) == *carried,
                            where + "input is not the dense exponent of (b, r, s, k)");
                    out = reduced(2 - Rational(st.p, st.q));
                    require(out == *carried, where + "2 - p/q differs from the input");
                    break;
                }
            }
        } catch (const ExponentError& e) {
            throw CertificateError(where + e.what());
        }
        if (i > 0) require(st.input.has_value() && *st.input == *carried, where + "recorded input does not link");
        require(st.output == out, where + "recorded output " + to_string(st.output) + " != recomputed " + to_string(out));
        carried = out;
    }
    require(*carried == cert.target, "chain ends at " + to_string(*carried) + ", not the target " + to_string(cert.target));
    return *carried;
}

bool replays(const ExponentCertificate& cert) {
    try {
        replay(cert);
        return true;
    } catch (const CertificateError&) {
        return false;
    }
}

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::SpiderBase: return "SpiderBase";
        case StepKind::KklStep: return "KKLStep";
        case StepKind::DenseBase: return "DenseBase";
        case StepKind::ModularDecomposition: return "ModularDecomposition";
    }
    return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Covered ? "covered" : "not-covered-by-this-paper"; }

std::string to_string(Route r) {
    switch (r) {
        case Route::None: return "none";
        case Route::SparseSpider: return "sparse-spider";
        case Route::ModularDecomposition: return "modular-decomposition";
        case Route::CompleteBipartite: return "complete-bipartite";
        case Route::DenseChain: return "dense-chain";
    }
    return "?";
}

namespace {

nlohmann::json step_params(const DerivationStep& st) {
    switch (st.kind) {
        case StepKind::SpiderBase: return {{"p", st.p}, {"k", st.k}, {"b", st.b}};
        case StepKind::KklStep: return {{"a", st.a}, {"b", st.b}};
        case StepKind::DenseBase: return {{"p", st.p}, {"k", st.k}, {"b", st.b}, {"s", st.s}};
        case StepKind::ModularDecomposition:
            return {{"p", st.p}, {"q", st.q}, {"s", st.s}, {"r", st.r}, {"k", st.k}, {"b", st.b}};
    }
    return {};
}

StepKind step_kind_from(const std::string& s) {
    for (auto k : {StepKind::SpiderBase, StepKind::KklStep, StepKind::DenseBase, StepKind::ModularDecomposition}) {
        if (to_string(k) == s) return k;
    }
    throw CertificateError("unknown step kind '" + s + "'");
}

Route route_from(const std::string& s) {
    for (auto r : {Route::None, Route::SparseSpider, Route::ModularDecomposition, Route::CompleteBipartite,
                   Route::DenseChain}) {
        if (to_string(r) == s) return r;
    }
    throw CertificateError("unknown route '" + s + "'");
}

std::string params_text(const ExponentCertificate& cert) {
    if (cert.steps.empty()) return "";
    // The defining step: the spider base for the sparse routes, the last step otherwise.
    const auto& st = cert.route == Route::SparseSpider || cert.route == Route::CompleteBipartite ? cert.steps.front()
                                                                                                   : cert.steps.back();
    std::ostringstream os;
    bool first = true;
    const nlohmann::json params = step_params(st);
    for (auto& [key, value] : params.items()) {
        os << (first ? "" : " ") << key << '=' << value.get<long>();
        first = false;
    }
    if (cert.route == Route::CompleteBipartite) os << " reductions=" << cert.steps.size() - 1;
    return os.str();
}

}  // namespace

nlohmann::json to_json(const DerivationStep& step) {
    nlohmann::json j;
    j["kind"] = to_string(step.kind);
    j["params"] = step_params(step);
    j["input"] = step.input ? nlohmann::json(to_string(*step.input)) : nlohmann::json(nullptr);
    j["output"] = to_string(step.output);
    return j;
}

nlohmann::json to_json(const ExponentCertificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : cert.steps) steps.push_back(to_json(st));
    return {{"schema", kSchema},
            {"target", to_string(cert.target)},
            {"verdict", to_string(cert.verdict)},
            {"route", to_string(cert.route)},
            {"steps", steps}};
}

ExponentCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        ExponentCertificate cert;
        cert.target = parse_rational(j.at("target").get<std::string>());
        const auto verdict = j.at("verdict").get<std::string>();
        if (verdict == to_string(Verdict::Covered)) {
            cert.verdict = Verdict::Covered;
        } else if (verdict == to_string(Verdict::NotCovered)) {
            cert.verdict = Verdict::NotCovered;
        } else {
            throw CertificateError("unknown verdict '" + verdict + "'");
        }
        cert.route = route_from(j.at("route").get<std::string>());
        for (const auto& js : j.at("steps")) {
            DerivationStep st;
            st.kind = step_kind_from(js.at("kind").get<std::string>());
            const auto& params = js.at("params");
            auto get = [&](const char* key) { return params.contains(key) ? params.at(key).get<long>() : 0L; };
            st.p = get("p");
            st.q = get("q");
            st.k = get("k");
            st.b = get("b");
            st.s = get("s");
            st.a = get("a");
            st.r = get("r");
            if (!js.at("input").is_null()) st.input = parse_rational(js.at("input").get<std::string>());
            st.output = parse_rational(js.at("output").get<std::string>());
            cert.steps.push_back(st);
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw CertificateError(std::string("malformed certificate JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw CertificateError(std::string("malformed certificate JSON: ") + e.what());
    }
}

std::vector<AtlasRow> exponent_atlas(long max_den) {
    if (max_den < 2) throw ExponentError("atlas needs max denominator >= 2");
    std::vector<AtlasRow> rows;
    for (long q = 2; q <= max_den; ++q) {
        for (long p = q + 1; p < 2 * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational t(p, q);
            rows.push_back({t, certify(t)});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const AtlasRow& x, const AtlasRow& y) { return x.target < y.target; });
    return rows;
}

std::string atlas_csv(const std::vector<AtlasRow>& rows) {
    std::ostringstream os;
    os << "# schema: " << kSchema << '\n';
    os << "target,verdict,route,parameters\n";
    for (const auto& row : rows) {
        os << to_string(row.target) << ',' << to_string(row.certificate.verdict) << ','
           << to_string(row.certificate.route) << ',' << params_text(row.certificate) << '\n';
    }
    return os.str();
}

RegularityConstants regularity_constants(long s, long b, long k) {
    if (s < 2) throw ExponentError("regularity constants need s >= 2");
    if (b < 1 || k < b) throw ExponentError("regularity constants need k >= b >= 1");
    RegularityConstants rc;
    rc.s = s;
    rc.b = b;
    rc.k = k;
    rc.epsilon = reduced(Rational(s - 1, (s - 1) * k + b));
    // K = ceil(20 * 2^(u/v)) is the least integer whose v-th power reaches 20^v * 2^u.
    const Rational x = reduced(1 / (rc.epsilon * rc.epsilon) + 1);
    const unsigned long u = x.get_num().get_ui();
    const unsigned long v = x.get_den().get_ui();
    const BigInt target = pow(BigInt(20), v) * pow(BigInt(2), u);
    BigInt root = integer_root(target, v);
    if (pow(root, v) != target) root += 1;
    rc.K = root;
    return rc;
}

}  // namespace turan
