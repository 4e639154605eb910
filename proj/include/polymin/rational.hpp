#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polymin {

// Exact arbitrary-precision arithmetic. Every decision in this library is a
// sign or parity test, so floating point is banned from all decision paths.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always in lowest terms, denominator > 0

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Integer& z) { return z.sign(); }

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }
inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^e for integer e (negative allowed when q != 0).
inline Rational pow_rational(const Rational& q, long long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("pow_rational: 0 to a negative power");
        return Rational(0);
    }
    Rational base = q;
    bool invert = e < 0;
    unsigned long long n = invert ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1ull) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (invert) acc = Rational(1) / acc;
    return acc;
}

inline Integer pow_integer(Integer base, unsigned long long e) {
    Integer acc(1);
    while (e) {
        if (e & 1ull) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline bool is_even(long long v) { return (v % 2) == 0; }
inline bool is_odd(long long v) { return (v % 2) != 0; }

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace polymin
