#include "tracepar/numeric.hpp"

#include <algorithm>

#include "tracepar/errors.hpp"

namespace tracepar {

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw NumericError("exact_div: division by zero");
  Integer q = a / b;
  if (q * b != a) throw NumericError("exact_div: inexact integer division");
  return q;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw NumericError("rational with zero denominator");
  return Rational(num, den);
}

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& q) {
  Integer d = denominator_of(q);
  if (d == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + d.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

Rational floor_rational(const Rational& q) {
  Integer n = numerator_of(q);
  Integer d = denominator_of(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f);
}

std::string to_decimal(const Rational& q, int digits) {
  bool negative = q < 0;
  Rational a = negative ? Rational(-q) : q;
  Integer scale = ipow(Integer(10), static_cast<unsigned>(std::max(digits, 0)));
  Rational scaled = a * Rational(scale) + Rational(1, 2);
  Integer r = numerator_of(floor_rational(scaled));
  std::string s = r.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && r != 0) s.insert(0, "-");
  return s;
}

std::string upper_bound_string(const Rational& bound) {
  if (bound <= 0) return "0";
  Integer n = numerator_of(bound);
  Integer d = denominator_of(bound);
  // Start from a digit-count estimate, then fix up exactly.
  long e = static_cast<long>(d.str().size()) - static_cast<long>(n.str().size()) - 1;
  auto fits = [&](long k) {
    // bound <= 10^-k
    if (k >= 0) return bound * Rational(ipow(Integer(10), static_cast<unsigned>(k))) <= 1;
    return bound <= Rational(ipow(Integer(10), static_cast<unsigned>(-k)));
  };
  while (!fits(e)) --e;
  while (fits(e + 1)) ++e;
  return "1e" + std::to_string(-e);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Rational fl = floor_rational(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / inner;
}

}  // namespace tracepar
