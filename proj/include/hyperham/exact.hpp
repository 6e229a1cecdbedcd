#pragma once

// Exact integer and rational arithmetic used by the counting and moment code.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyperham {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial_exact(unsigned n, unsigned k);
Rational pow(const Rational& base, unsigned exponent);

/// e truncated to 50 decimal places, as an exact rational.
///
/// Every exact computation that needs p* goes through this constant, so
/// results are reproducible bit for bit.
const Rational& e_rational_50();

/// Natural log of |x| for arbitrarily large integers (x != 0).
double log_abs(const BigInt& x);
/// Natural log of a positive rational.
double log_rational(const Rational& x);
double to_double(const Rational& x);

/// Nearest rational with denominator 2^53 (exact when p*2^53 is integral).
Rational rational_from_double(double p);

/// Parses "a/b", an integer, or a plain decimal literal ("0.125", "1e-3")
/// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Decimal rendering with `digits` significant digits after the point.
std::string to_decimal_string(const Rational& x, unsigned digits);

}  // namespace hyperham
