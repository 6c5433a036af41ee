#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tracepar/upoly.hpp"

namespace tracepar {

/// Polynomial in x and y with integer coefficients, stored as a
/// polynomial in x whose coefficients are polynomials in y.
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(std::vector<UPoly> rows);
  explicit BPoly(const Integer& constant);
  /// c x^i y^j
  static BPoly monomial(const Integer& c, int i, int j);
  /// A polynomial in y only.
  static BPoly from_y(const UPoly& p);
  /// A polynomial in x only.
  static BPoly from_x(const UPoly& p);

  bool is_zero() const { return rows_.empty(); }
  int degree_x() const { return static_cast<int>(rows_.size()) - 1; }
  int degree_y() const;
  const std::vector<UPoly>& rows() const { return rows_; }
  /// Coefficient of x^i, a polynomial in y.
  UPoly row(int i) const;
  Integer coeff(int i, int j) const { return row(i).coeff(j); }
  /// Non-zero terms keyed by (x-degree, y-degree).
  std::map<std::pair<int, int>, Integer> terms() const;

  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const Integer& k);
  BPoly operator-() const;

  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend BPoly operator*(BPoly a, const Integer& k) { return a *= k; }
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.rows_ == b.rows_; }

  /// Multiply every coefficient row by a polynomial in y.
  BPoly times_y(const UPoly& p) const;
  BPoly shift_x(int k) const;

  UPoly at_x1() const;
  UPoly at_y1() const;
  BPoly dx() const;
  BPoly dy() const;
  Integer eval(const Integer& x, const Integer& y) const;

  /// gcd in Z[y] of the coefficient rows, positive leading coefficient.
  UPoly content_x() const;
  BPoly primitive_part_x() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<UPoly> rows_;
};

bool is_zero(const BPoly& p);

/// a / b for b dividing a in Z[x,y]; throws NumericError otherwise.
BPoly exact_div(const BPoly& a, const BPoly& b);
BPoly exact_div_y(const BPoly& a, const UPoly& d);

/// Greatest common divisor up to sign, computed by a primitive remainder
/// sequence in Z[y][x].
BPoly gcd(const BPoly& a, const BPoly& b);

}  // namespace tracepar
