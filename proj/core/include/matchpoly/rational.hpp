#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace matchpoly {

/// Exact scalar used by the rational regime. Arbitrary precision, always
/// normalized (gcd-reduced, positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

inline BigInt factorial(int m) {
    if (m < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is always an intermediate binomial
    }
    return r;
}

/// Number of perfect matchings of the complete graph on 2m vertices,
/// (2m-1)!! = (2m)!/(2^m m!).
inline BigInt double_factorial_odd(int m) {
    BigInt r = 1;
    for (int i = 1; i <= m; ++i) r *= (2 * i - 1);
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p/q", "p", or a plain integer string. Throws on malformed input
/// or zero denominator.
Rational parse_rational(const std::string& text);

/// Exact conversion of an IEEE double (doubles are dyadic rationals).
/// Throws on NaN or infinity.
Rational rational_from_double(double x);

}  // namespace matchpoly
