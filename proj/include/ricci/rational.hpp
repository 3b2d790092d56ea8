#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ricci {

// All curvature and transport values are exact rationals; floating point
// enters only in the spectral module.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    return Rational(Int(num), Int(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

}  // namespace ricci
