#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pclab {

// Exact arbitrary-precision fraction. Always kept in canonical form
// (denominator > 0, gcd(num, den) = 1); boost's rational adaptor
// maintains the invariant on every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Renders as "p/q", or just "p" for integers.
std::string to_string(const Rational& r);

// Parses "p/q" or "p". Throws on malformed input.
Rational parse_rational(const std::string& text);

// Exact n-th power for small non-negative exponents.
Rational rational_pow(const Rational& base, unsigned exp);

// Binomial coefficient C(n, k) as an exact integer, 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace pclab
