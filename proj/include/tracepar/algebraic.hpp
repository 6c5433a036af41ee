#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tracepar/bpoly.hpp"
#include "tracepar/numeric.hpp"
#include "tracepar/upoly.hpp"

namespace tracepar {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

Interval point_interval(const Rational& q);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws NumericError if b contains zero.
Interval operator/(const Interval& a, const Interval& b);
/// Outward rounding of both endpoints to multiples of 2^-bits.
Interval round_outward(const Interval& a, unsigned bits);
/// Interval Horner evaluation, rounded outward after every step.
Interval evaluate(const UPoly& p, const Interval& x, unsigned bits);

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);
  int sign_changes(const Rational& x) const;
  /// Number of distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  /// Number of distinct roots in [lo, hi].
  int count_closed(const Rational& lo, const Rational& hi) const;
  const UPoly& poly() const { return seq_.front(); }

 private:
  std::vector<UPoly> seq_;
};

/// A real root of a squarefree primitive polynomial, given either exactly
/// (lo == hi) or by an open isolating interval with non-zero endpoint values
/// of opposite signs.
class RealRoot {
 public:
  RealRoot(UPoly poly, Rational lo, Rational hi);
  static RealRoot exact(const Rational& q);

  const UPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }
  Interval interval() const { return {lo_, hi_}; }

  /// Bisect until the width is at most `width`.
  void refine(const Rational& width);
  Interval enclosure(unsigned bits);

 private:
  UPoly poly_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0;
};

/// The smallest positive real root of p, if any.
std::optional<RealRoot> smallest_positive_root(const UPoly& p);

/// Multiplicity of the root r in q (0 if q does not vanish there).
unsigned multiplicity_at(const UPoly& q, const RealRoot& r);

/// Sign of q at r, exact.
int sign_at_root(const UPoly& q, RealRoot r);

/// -1, 0 or 1 as a < b, a == b, a > b, decided exactly.
int compare_roots(RealRoot a, RealRoot b);

/// Resultant with respect to the outer (row) variable of two polynomials
/// whose coefficients lie in Z[z]; the result is a polynomial in z.
UPoly resultant(const BPoly& a, const BPoly& b);

/// A real algebraic number. When `certified()` the defining polynomial has
/// exactly one root in the stored interval and refinement is exact bisection;
/// otherwise values come from the enclosure function alone.
class AlgebraicValue {
 public:
  using Enclosure = std::function<Interval(unsigned bits)>;

  AlgebraicValue() = default;
  static AlgebraicValue from_rational(const Rational& q);
  static AlgebraicValue from_root(const RealRoot& r);
  /// Tries to certify `candidate` against `f` while doubling the precision.
  static AlgebraicValue from_enclosure(Enclosure f, std::optional<UPoly> candidate, unsigned bits);

  bool exact() const { return rational_.has_value(); }
  const std::optional<Rational>& rational_value() const { return rational_; }
  bool certified() const { return root_.has_value(); }
  std::optional<UPoly> defining_polynomial() const;
  unsigned precision_bits() const { return bits_; }

  /// Enclosure of width at most 2^-bits when possible.
  Interval enclosure(unsigned bits) const;
  /// Enclosure of width at most 10^-(digits+2) when possible.
  Interval interval_for_digits(int digits) const;
  std::string approx(int digits) const;
  std::string error_bound(int digits) const;
  double to_double() const;

 private:
  std::optional<Rational> rational_;
  std::optional<RealRoot> root_;
  std::optional<UPoly> candidate_;
  Enclosure enclosure_;
  unsigned bits_ = 0;
};

AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b);
AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b);
AlgebraicValue operator+(const AlgebraicValue& a, const Rational& q);
AlgebraicValue operator*(const AlgebraicValue& a, const Rational& q);
/// 1/a for a > 0.
AlgebraicValue reciprocal(const AlgebraicValue& a);

/// num(r)/den(r) with den(r) != 0, as an algebraic value with a resultant
/// defining polynomial.
AlgebraicValue rational_function_at_root(const RealRoot& r, const UPoly& num, const UPoly& den,
                                         unsigned bits);

/// Decides whether every root of p other than r has modulus strictly larger
/// than r, using Aberth iteration and Weierstrass inclusion disks.
bool certify_dominant(const UPoly& p, const RealRoot& r);

inline constexpr unsigned kMaxPrecisionBits = 8192;
inline constexpr int kMaxDefiningDegree = 8;

}  // namespace tracepar
