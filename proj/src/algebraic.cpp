#include "tracepar/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "tracepar/bareiss.hpp"
#include "tracepar/errors.hpp"

namespace tracepar {

namespace {

Rational pow2(int e) {
  if (e >= 0) return Rational(ipow(Integer(2), static_cast<unsigned>(e)));
  return Rational(Integer(1), ipow(Integer(2), static_cast<unsigned>(-e)));
}

Rational ceil_rational(const Rational& q) { return -floor_rational(-q); }

}  // namespace

Interval point_interval(const Rational& q) { return {q, q}; }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw NumericError("interval division by an interval containing zero");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval round_outward(const Interval& a, unsigned bits) {
  Rational scale = pow2(static_cast<int>(bits));
  return {floor_rational(a.lo * scale) / scale, ceil_rational(a.hi * scale) / scale};
}

Interval evaluate(const UPoly& p, const Interval& x, unsigned bits) {
  if (x.lo == x.hi) return point_interval(p.eval(x.lo));
  Interval acc = point_interval(Rational(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + point_interval(Rational(*it));
    acc = round_outward(acc, bits);
  }
  return acc;
}

SturmSequence::SturmSequence(const UPoly& p) {
  seq_.push_back(p);
  if (p.degree() < 1) return;
  seq_.push_back(p.derivative());
  while (seq_.back().degree() > 0) {
    const UPoly& a = seq_[seq_.size() - 2];
    const UPoly& b = seq_.back();
    unsigned e = 0;
    UPoly r = scaled_remainder(a, b, e);
    if (r.is_zero()) break;
    // r = lc(b)^e * (a mod b); keep the sign of -(a mod b)
    bool flip = !(b.leading() < 0 && (e % 2 == 1));
    Integer c = r.content();
    r = exact_div(r, c);
    seq_.push_back(flip ? -r : r);
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  return sign_changes(lo) - sign_changes(hi);
}

int SturmSequence::count_closed(const Rational& lo, const Rational& hi) const {
  return count(lo, hi) + (poly().sign_at(lo) == 0 ? 1 : 0);
}

RealRoot::RealRoot(UPoly poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ == hi_) return;
  if (poly_.sign_at(lo_) == 0) {
    hi_ = lo_;
    return;
  }
  if (poly_.sign_at(hi_) == 0) {
    lo_ = hi_;
    return;
  }
  sign_lo_ = poly_.sign_at(lo_);
  if (sign_lo_ == poly_.sign_at(hi_)) throw NumericError("root interval without a sign change");
  // A rational root n/d has d dividing the leading coefficient, so once the
  // width drops below 1/lc^2 it is the simplest rational in the interval.
  Integer lc = abs(poly_.leading());
  refine(Rational(Integer(1), lc * lc * 2));
  if (is_rational()) return;
  Rational q = simplest_between(lo_, hi_);
  if (poly_.sign_at(q) == 0) lo_ = hi_ = q;
}

RealRoot RealRoot::exact(const Rational& q) {
  UPoly p(std::vector<Integer>{-numerator_of(q), denominator_of(q)});
  return RealRoot(p, q, q);
}

void RealRoot::refine(const Rational& width) {
  while (hi_ - lo_ > width) {
    Rational m = (lo_ + hi_) / 2;
    int s = poly_.sign_at(m);
    if (s == 0) {
      lo_ = hi_ = m;
      return;
    }
    if (s == sign_lo_)
      lo_ = m;
    else
      hi_ = m;
  }
}

Interval RealRoot::enclosure(unsigned bits) {
  refine(pow2(-static_cast<int>(bits)));
  return interval();
}

std::optional<RealRoot> smallest_positive_root(const UPoly& p) {
  if (p.degree() < 1) return std::nullopt;
  UPoly s = squarefree_part(p);
  while (s.coeff(0).is_zero()) s = exact_div(s, UPoly::variable());
  if (s.degree() < 1) return std::nullopt;
  Rational bound = 1;
  for (const auto& c : s.coeffs()) bound = std::max(bound, Rational(abs(c), abs(s.leading())));
  Rational lo = 0;
  Rational hi = floor_rational(bound) + 2;
  SturmSequence st(s);
  if (st.count(lo, hi) == 0) return std::nullopt;
  for (;;) {
    int c = st.count(lo, hi);
    if (c == 1) return RealRoot(s, lo, hi);
    Rational m = (lo + hi) / 2;
    if (s.sign_at(m) == 0 && st.count(lo, m) == 1) return RealRoot(s, m, m);
    if (st.count(lo, m) >= 1)
      hi = m;
    else
      lo = m;
  }
}

unsigned multiplicity_at(const UPoly& q, const RealRoot& r) {
  if (q.is_zero()) throw NumericError("multiplicity in the zero polynomial");
  for (unsigned m = 0;; ++m) {
    UPoly d = q.derivative(m);
    if (r.is_rational()) {
      if (d.sign_at(r.lo()) != 0) return m;
      continue;
    }
    UPoly g = gcd(d, r.poly());
    if (g.degree() < 1) return m;
    if (SturmSequence(g.primitive_part()).count(r.lo(), r.hi()) == 0) return m;
  }
}

int sign_at_root(const UPoly& q, RealRoot r) {
  if (r.is_rational()) return q.sign_at(r.lo());
  if (multiplicity_at(q, r) > 0) return 0;
  for (unsigned bits = 64;; bits *= 2) {
    Interval v = evaluate(q, r.enclosure(bits), bits + 16);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
  }
}

int compare_roots(RealRoot a, RealRoot b) {
  // g has at most one root in each isolating interval; a == b iff it has
  // one in their overlap
  UPoly g = gcd(a.poly(), b.poly()).primitive_part();
  std::optional<SturmSequence> st;
  if (g.degree() >= 1) st.emplace(g);
  for (unsigned bits = 16;; bits *= 2) {
    if (a.hi() < b.lo()) return -1;
    if (b.hi() < a.lo()) return 1;
    if (a.is_rational() && b.is_rational()) return 0;
    if (st && st->count_closed(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())) > 0) return 0;
    a.enclosure(bits);
    b.enclosure(bits);
  }
}

UPoly resultant(const BPoly& a, const BPoly& b) {
  const int m = a.degree_x();
  const int n = b.degree_x();
  if (m < 0 || n < 0) return {};
  if (m == 0) {
    UPoly r(Integer(1));
    for (int i = 0; i < n; ++i) r *= a.row(0);
    return r;
  }
  if (n == 0) {
    UPoly r(Integer(1));
    for (int i = 0; i < m; ++i) r *= b.row(0);
    return r;
  }
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = a.row(m - k);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(j + k)] = b.row(n - k);
  return bareiss_determinant(std::move(s));
}

// ---------------------------------------------------------------------------

AlgebraicValue AlgebraicValue::from_rational(const Rational& q) {
  AlgebraicValue v;
  v.rational_ = q;
  v.root_ = RealRoot::exact(q);
  return v;
}

AlgebraicValue AlgebraicValue::from_root(const RealRoot& r) {
  if (r.is_rational()) return from_rational(r.lo());
  AlgebraicValue v;
  v.root_ = r;
  return v;
}

AlgebraicValue AlgebraicValue::from_enclosure(Enclosure f, std::optional<UPoly> candidate, unsigned bits) {
  AlgebraicValue v;
  v.enclosure_ = f;
  std::optional<UPoly> sf;
  if (candidate && candidate->degree() >= 1) sf = squarefree_part(*candidate);
  std::optional<SturmSequence> st;
  if (sf) st.emplace(*sf);
  for (unsigned b = std::max(bits, 32u);; b *= 2) {
    Interval iv = f(b);
    v.bits_ = b;
    if (!sf) return v;
    int c = st->count_closed(iv.lo, iv.hi);
    if (c == 0) {
      // the candidate does not vanish near the value; keep only the enclosure
      return v;
    }
    if (c == 1) {
      RealRoot r(*sf, iv.lo, iv.hi);
      AlgebraicValue out = from_root(r);
      out.bits_ = b;
      return out;
    }
    if (b >= kMaxPrecisionBits) break;
  }
  v.candidate_ = sf;
  return v;
}

std::optional<UPoly> AlgebraicValue::defining_polynomial() const {
  if (root_) return root_->poly();
  return candidate_;
}

Interval AlgebraicValue::enclosure(unsigned bits) const {
  if (rational_) return point_interval(*rational_);
  if (root_) {
    RealRoot r = *root_;
    return r.enclosure(bits);
  }
  if (!enclosure_) throw NumericError("algebraic value without data");
  return enclosure_(bits);
}

Interval AlgebraicValue::interval_for_digits(int digits) const {
  Rational target(Integer(1), ipow(Integer(10), static_cast<unsigned>(digits + 2)));
  auto bits = static_cast<unsigned>(std::ceil((digits + 2) * 3.3219280948873626)) + 2;
  if (certified()) return enclosure(bits);
  Interval iv = enclosure(bits);
  while (iv.width() > target && bits < kMaxPrecisionBits) {
    bits *= 2;
    iv = enclosure(bits);
  }
  return iv;
}

std::string AlgebraicValue::approx(int digits) const {
  if (rational_) return to_decimal(*rational_, digits);
  return to_decimal(interval_for_digits(digits).mid(), digits);
}

std::string AlgebraicValue::error_bound(int digits) const {
  Interval iv = rational_ ? point_interval(*rational_) : interval_for_digits(digits);
  Rational mid = iv.mid();
  Rational scale(ipow(Integer(10), static_cast<unsigned>(digits)));
  Rational rounded = floor_rational(abs(mid) * scale + Rational(1, 2)) / scale;
  if (mid < 0) rounded = -rounded;
  Rational err = abs(rounded - mid) + iv.width() / 2;
  return upper_bound_string(err);
}

double AlgebraicValue::to_double() const {
  if (rational_) return tracepar::to_double(*rational_);
  return tracepar::to_double(enclosure(64).mid());
}

namespace {

// Coefficients of p as constant rows of a polynomial over Z[z].
BPoly constant_rows(const UPoly& p) { return BPoly::from_x(p); }

std::optional<UPoly> product_degree_ok(const AlgebraicValue& a, const AlgebraicValue& b) {
  auto fa = a.defining_polynomial();
  auto fb = b.defining_polynomial();
  if (!fa || !fb || !a.certified() || !b.certified()) return std::nullopt;
  if (fa->degree() * fb->degree() > kMaxDefiningDegree) return std::nullopt;
  return fa;
}

}  // namespace

AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.exact()) return b + *a.rational_value();
  if (b.exact()) return a + *b.rational_value();
  std::optional<UPoly> cand;
  if (product_degree_ok(a, b)) {
    UPoly f = *a.defining_polynomial();
    UPoly g = *b.defining_polynomial();
    // g(z - y) as a polynomial in y over Z[z]
    std::vector<UPoly> rows(static_cast<std::size_t>(g.degree()) + 1);
    for (int i = 0; i <= g.degree(); ++i)
      for (int j = 0; j <= i; ++j) {
        Integer c = g.coeff(i) * binomial(static_cast<unsigned>(i), static_cast<unsigned>(j));
        if (j % 2 == 1) c = -c;
        rows[static_cast<std::size_t>(j)] += UPoly::monomial(c, i - j);
      }
    cand = resultant(constant_rows(f), BPoly(rows));
  }
  auto enc = [a, b](unsigned bits) { return round_outward(a.enclosure(bits + 1) + b.enclosure(bits + 1), bits + 2); };
  return AlgebraicValue::from_enclosure(enc, cand, 64);
}

AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.exact()) return b * *a.rational_value();
  if (b.exact()) return a * *b.rational_value();
  std::optional<UPoly> cand;
  if (product_degree_ok(a, b)) {
    UPoly f = *a.defining_polynomial();
    UPoly g = *b.defining_polynomial();
    const int n = g.degree();
    std::vector<UPoly> rows(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) rows[static_cast<std::size_t>(n - i)] += UPoly::monomial(g.coeff(i), i);
    cand = resultant(constant_rows(f), BPoly(rows));
  }
  auto enc = [a, b](unsigned bits) {
    Interval x = a.enclosure(bits + 8);
    Interval y = b.enclosure(bits + 8);
    return round_outward(x * y, bits + 8);
  };
  return AlgebraicValue::from_enclosure(enc, cand, 64);
}

AlgebraicValue operator+(const AlgebraicValue& a, const Rational& q) {
  if (a.exact()) return AlgebraicValue::from_rational(*a.rational_value() + q);
  std::optional<UPoly> cand;
  if (auto f = a.defining_polynomial(); f && a.certified()) cand = f->compose_linear(Rational(1), -q);
  auto enc = [a, q](unsigned bits) { return a.enclosure(bits) + point_interval(q); };
  return AlgebraicValue::from_enclosure(enc, cand, 64);
}

AlgebraicValue operator*(const AlgebraicValue& a, const Rational& q) {
  if (a.exact() || q == 0) return AlgebraicValue::from_rational(a.exact() ? *a.rational_value() * q : Rational(0));
  std::optional<UPoly> cand;
  if (auto f = a.defining_polynomial(); f && a.certified()) cand = f->compose_linear(1 / q, Rational(0));
  auto enc = [a, q](unsigned bits) { return a.enclosure(bits + 8) * point_interval(q); };
  return AlgebraicValue::from_enclosure(enc, cand, 64);
}

AlgebraicValue reciprocal(const AlgebraicValue& a) {
  if (a.exact()) {
    if (*a.rational_value() == 0) throw NumericError("reciprocal of zero");
    return AlgebraicValue::from_rational(1 / *a.rational_value());
  }
  std::optional<UPoly> cand;
  if (auto f = a.defining_polynomial(); f && a.certified()) cand = f->reversed().primitive_part();
  auto enc = [a](unsigned bits) {
    for (unsigned b = bits;; b *= 2) {
      Interval x = a.enclosure(b + 8);
      if (!x.contains_zero()) return round_outward(point_interval(Rational(1)) / x, bits + 8);
      if (b > kMaxPrecisionBits) throw NumericError("reciprocal of a value indistinguishable from zero");
    }
  };
  return AlgebraicValue::from_enclosure(enc, cand, 64);
}

AlgebraicValue rational_function_at_root(const RealRoot& r, const UPoly& num, const UPoly& den,
                                         unsigned bits) {
  if (r.is_rational()) {
    Rational d = den.eval(r.lo());
    if (d == 0) throw NumericError("denominator vanishes at the root");
    return AlgebraicValue::from_rational(num.eval(r.lo()) / d);
  }
  if (multiplicity_at(den, r) > 0) throw NumericError("denominator vanishes at the root");
  UPoly f = r.poly();
  UPoly g = gcd(f, den);
  if (g.degree() >= 1) f = exact_div(f, g.primitive_part()).primitive_part();
  std::optional<UPoly> cand;
  if (f.degree() <= kMaxDefiningDegree) {
    unsigned e1 = 0;
    unsigned e2 = 0;
    UPoly rn = scaled_remainder(num, f, e1);
    UPoly rd = scaled_remainder(den, f, e2);
    rn *= ipow(f.leading(), e2);
    rd *= ipow(f.leading(), e1);
    const int d = std::max(rn.degree(), rd.degree());
    std::vector<UPoly> rows(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (int j = 0; j <= d; ++j) rows[static_cast<std::size_t>(j)] = UPoly(std::vector<Integer>{-rn.coeff(j), rd.coeff(j)});
    UPoly res = resultant(constant_rows(f), BPoly(rows));
    if (res.degree() >= 1) cand = res.primitive_part();
  }
  auto root = std::make_shared<RealRoot>(RealRoot(f, r.lo(), r.hi()));
  auto enc = [root, num, den](unsigned b) {
    for (unsigned p = b;; p *= 2) {
      Interval x = root->enclosure(p + 8);
      Interval nv = evaluate(num, x, p + 16);
      Interval dv = evaluate(den, x, p + 16);
      if (!dv.contains_zero()) return round_outward(nv / dv, p + 16);
      if (p > kMaxPrecisionBits) throw NumericError("denominator indistinguishable from zero");
    }
  };
  return AlgebraicValue::from_enclosure(enc, cand, bits);
}

// ---------------------------------------------------------------------------

namespace {

using Real = boost::multiprecision::mpfr_float_100;

struct Cx {
  Real re;
  Real im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real cabs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Integer& a) { return Real(a.str()); }
Real to_real(const Rational& q) { return to_real(numerator_of(q)) / to_real(denominator_of(q)); }

Cx horner(const std::vector<Real>& c, const Cx& z) {
  Cx acc{Real(0), Real(0)};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Cx{*it, Real(0)};
  return acc;
}

}  // namespace

bool certify_dominant(const UPoly& p, const RealRoot& r) {
  UPoly s = squarefree_part(p);
  const int n = s.degree();
  if (n <= 1) return true;
  RealRoot rr = r;
  rr.refine(Rational(Integer(1), ipow(Integer(10), 60)));

  std::vector<Real> c;
  for (const auto& a : s.coeffs()) c.push_back(to_real(a));
  std::vector<Real> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<unsigned>(i));

  Real radius = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) radius = std::max(radius, Real(abs(c[i] / c.back())));
  radius = (1 + radius) / 2;
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<Cx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Real t = 2 * pi * k / n + Real("0.4");
    z[static_cast<std::size_t>(k)] = {radius * cos(t), radius * sin(t)};
  }

  const Real tol("1e-85");
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      auto uk = static_cast<std::size_t>(k);
      Cx pv = horner(c, z[uk]);
      Cx dv = horner(dc, z[uk]);
      if (cabs(dv) == 0) dv = {Real("1e-90"), Real(0)};
      Cx ratio = pv / dv;
      Cx sum{Real(0), Real(0)};
      for (int j = 0; j < n; ++j)
        if (j != k) sum = sum + Cx{Real(1), Real(0)} / (z[uk] - z[static_cast<std::size_t>(j)]);
      Cx w = ratio / (Cx{Real(1), Real(0)} - ratio * sum);
      z[uk] = z[uk] - w;
      worst = std::max(worst, Real(cabs(w) / (1 + cabs(z[uk]))));
    }
    if (worst < tol) break;
  }

  std::vector<Real> rad(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<std::size_t>(i);
    Cx prod{c.back(), Real(0)};
    for (int j = 0; j < n; ++j)
      if (j != i) prod = prod * (z[ui] - z[static_cast<std::size_t>(j)]);
    Real w = cabs(horner(c, z[ui]) / prod);
    rad[ui] = n * w * Real("1.000001") + Real("1e-80");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cabs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) <=
          rad[static_cast<std::size_t>(i)] + rad[static_cast<std::size_t>(j)])
        return false;

  const Real lo = to_real(rr.lo());
  const Real hi = to_real(rr.hi());
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    auto ui = static_cast<std::size_t>(i);
    // distance from the disk centre to the real segment [lo, hi]
    Real dx = 0;
    if (z[ui].re < lo) dx = lo - z[ui].re;
    if (z[ui].re > hi) dx = z[ui].re - hi;
    Real dist = sqrt(dx * dx + z[ui].im * z[ui].im);
    if (dist <= rad[ui]) {
      ++hits;
      continue;
    }
    if (cabs(z[ui]) - rad[ui] <= hi) return false;
  }
  return hits == 1;
}

}  // namespace tracepar
