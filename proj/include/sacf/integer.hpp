#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sacf {

// Exact coefficient ring / field used throughout the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const Integer& x) { return x.convert_to<double>(); }

}  // namespace sacf
