#include "pclab/rational.hpp"

namespace pclab {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

}  // namespace pclab
