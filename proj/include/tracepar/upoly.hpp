#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tracepar/numeric.hpp"

namespace tracepar {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored from degree 0 upwards with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Integer> coeffs);
  explicit UPoly(const Integer& constant);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly monomial(const Integer& c, int degree);
  static UPoly variable() { return monomial(Integer(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int i) const;
  const Integer& leading() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Integer& k);
  UPoly operator-() const;

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Integer& k) { return a *= k; }
  friend UPoly operator*(const Integer& k, UPoly a) { return a *= k; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative(unsigned times = 1) const;
  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  /// Sign of p(x) computed exactly.
  int sign_at(const Rational& x) const;

  Integer content() const;
  /// Divided by its content, with a positive leading coefficient.
  UPoly primitive_part() const;
  /// Truncation to degrees < n.
  UPoly truncated(int n) const;
  /// x^deg p(1/x).
  UPoly reversed() const;
  /// p(a x + b) scaled by the common denominator to an integer primitive polynomial.
  UPoly compose_linear(const Rational& a, const Rational& b) const;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// a / b when b divides a over the integers; throws NumericError otherwise.
UPoly exact_div(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const Integer& k);
inline bool is_zero(const UPoly& p) { return p.is_zero(); }

/// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);

/// Remainder of a modulo b over the rationals, multiplied by lc(b)^e so
/// that it has integer coefficients. `e` is returned through `exponent`.
UPoly scaled_remainder(const UPoly& a, const UPoly& b, unsigned& exponent);

/// Greatest common divisor, primitive with positive leading coefficient
/// times the gcd of the contents.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun decomposition: result[i] is the squarefree factor of multiplicity i+1
/// (possibly constant 1). The product of result[i]^(i+1) equals the primitive part of p.
std::vector<UPoly> squarefree_decomposition(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

}  // namespace tracepar
