#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace birkhoff {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace birkhoff
