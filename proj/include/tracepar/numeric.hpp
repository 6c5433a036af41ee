#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace tracepar {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_zero(const Integer& a) { return a.is_zero(); }

/// Quotient of an exact division; throws NumericError if `b` does not divide `a`.
Integer exact_div(const Integer& a, const Integer& b);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer& base, unsigned exponent);

Rational make_rational(const Integer& num, const Integer& den);
Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& a);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

/// Round-to-nearest fixed-point rendering with `digits` digits after the point.
std::string to_decimal(const Rational& q, int digits);

/// A short "1e-N" style upper bound for a non-negative quantity.
std::string upper_bound_string(const Rational& bound);

double to_double(const Rational& q);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

Rational floor_rational(const Rational& q);

}  // namespace tracepar
