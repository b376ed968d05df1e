#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jetvar {

/// Exact arbitrary-precision rational coefficient field.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

/// Renders as "p" or "p/q" with q > 0 in lowest terms.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace jetvar
