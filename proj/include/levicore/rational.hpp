#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace levicore {

// The universal scalar of the engine: arbitrary-precision rationals.
// Always stored in lowest terms with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc(1), b = base;
    while (exp > 0) {
        if (exp & 1u) acc *= b;
        exp >>= 1u;
        if (exp > 0) b *= b;
    }
    return acc;
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace levicore
