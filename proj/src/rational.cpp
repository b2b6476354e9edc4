#include "turan/rational.hpp"

#include <stdexcept>

namespace turan {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    BigInt p(std::string(num[0] == '+' ? num.substr(1) : num));
    BigInt q(std::string(den[0] == '+' ? den.substr(1) : den));
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& v) { return v.get_str(); }

BigInt ceil(const Rational& r) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

BigInt floor(const Rational& r) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

BigInt integer_root(const BigInt& v, unsigned long k) {
    if (v < 0 || k == 0) throw std::invalid_argument("integer_root: negative radicand or zero index");
    BigInt out;
    mpz_root(out.get_mpz_t(), v.get_mpz_t(), k);
    return out;
}

BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace turan
