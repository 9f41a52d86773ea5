#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace confspace {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& i);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Representative of r modulo 1 in [0, 1).
Rational frac(const Rational& r);
bool is_integer(const Rational& r);

// Residue of a modulo m in [0, m), m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace confspace
