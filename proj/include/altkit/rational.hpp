#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace altkit {

/// Exact arithmetic scalars. Rational is always canonical: coprime
/// numerator/denominator, denominator > 0, zero stored as 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r = Rational(num) / Rational(den);
    return r;
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// Canonical text form: "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view s);

/// q^e for integer e (negative allowed when q != 0).
inline Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    Rational base = q;
    if (e < 0) {
        if (q == 0) throw std::domain_error("0 has no negative power");
        base = Rational(1) / q;
        e = -e;
    }
    Rational acc(1);
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

inline Integer factorial(unsigned n) {
    Integer acc(1);
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer acc(1);
    for (unsigned i = 0; i < k; ++i) {
        acc *= Integer(n - i);
        acc /= Integer(i + 1);  // exact at every step
    }
    return acc;
}

}  // namespace altkit
