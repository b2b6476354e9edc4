#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace turan {

using BigInt = mpz_class;
/// Exact fraction; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Smallest integer >= r.
BigInt ceil(const Rational& r);
/// Largest integer <= r.
BigInt floor(const Rational& r);

/// Largest integer x >= 0 with x^k <= v (v >= 0, k >= 1).
BigInt integer_root(const BigInt& v, unsigned long k);

BigInt pow(const BigInt& base, unsigned long exp);

}  // namespace turan
