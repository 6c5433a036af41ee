#include "tracepar/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "tracepar/errors.hpp"

namespace tracepar {

UPoly::UPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Integer& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UPoly::UPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UPoly UPoly::monomial(const Integer& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Integer UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const Integer& UPoly::leading() const {
  if (c_.empty()) throw NumericError("leading coefficient of the zero polynomial");
  return c_.back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) {
  *this = *this * o;
  return *this;
}

UPoly& UPoly::operator*=(const Integer& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::derivative(unsigned times) const {
  UPoly r = *this;
  for (unsigned t = 0; t < times; ++t) {
    if (r.c_.empty()) break;
    std::vector<Integer> d(r.c_.size() - 1);
    for (std::size_t i = 1; i < r.c_.size(); ++i) d[i - 1] = r.c_[i] * static_cast<unsigned long>(i);
    r = UPoly(std::move(d));
  }
  return r;
}

Integer UPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int UPoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  const Integer n = numerator_of(x);
  const Integer d = denominator_of(x);
  // sum c_i n^i d^(deg-i), which has the sign of p(x) since d > 0
  Integer acc = 0;
  Integer npow = 1;
  std::vector<Integer> dpows(c_.size());
  dpows[0] = 1;
  for (std::size_t i = 1; i < c_.size(); ++i) dpows[i] = dpows[i - 1] * d;
  const std::size_t deg = c_.size() - 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) acc += c_[i] * npow * dpows[deg - i];
    npow *= n;
  }
  return acc.sign();
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

UPoly UPoly::primitive_part() const {
  if (c_.empty()) return {};
  Integer g = content();
  if (c_.back() < 0) g = -g;
  return exact_div(*this, g);
}

UPoly UPoly::truncated(int n) const {
  if (n <= 0) return {};
  if (static_cast<int>(c_.size()) <= n) return *this;
  return UPoly(std::vector<Integer>(c_.begin(), c_.begin() + n));
}

UPoly UPoly::reversed() const {
  std::vector<Integer> r(c_.rbegin(), c_.rend());
  return UPoly(std::move(r));
}

UPoly UPoly::compose_linear(const Rational& a, const Rational& b) const {
  // Horner in rationals: acc = acc * (a x + b) + c_i
  std::vector<Rational> acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * b;
      next[i + 1] += acc[i] * a;
    }
    next[0] += Rational(*it);
    acc = std::move(next);
  }
  Integer l = 1;
  for (const auto& q : acc) l = boost::multiprecision::lcm(l, denominator_of(q));
  std::vector<Integer> out;
  out.reserve(acc.size());
  for (const auto& q : acc) out.push_back(numerator_of(q * Rational(l)));
  return UPoly(std::move(out)).primitive_part();
}

std::string UPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Integer& c = c_[i];
    if (c.is_zero()) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly exact_div(const UPoly& a, const Integer& k) {
  std::vector<Integer> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.push_back(exact_div(c, k));
  return UPoly(std::move(r));
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw NumericError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NumericError("inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rem[ui].is_zero()) continue;
    Integer t = exact_div(rem[ui], lb);
    const auto shift = ui - bc.size() + 1;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= t * bc[j];
    q[shift] = std::move(t);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw NumericError("inexact polynomial division");
  return UPoly(std::move(q));
}

UPoly scaled_remainder(const UPoly& a, const UPoly& b, unsigned& exponent) {
  if (b.is_zero()) throw NumericError("remainder modulo the zero polynomial");
  exponent = 0;
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const Integer& lb = b.leading();
  const int db = b.degree();
  auto deg = [&r]() {
    int d = static_cast<int>(r.size()) - 1;
    while (d >= 0 && r[static_cast<std::size_t>(d)].is_zero()) --d;
    return d;
  };
  for (int dr = deg(); dr >= db; dr = deg()) {
    Integer lr = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb;
    const auto shift = static_cast<std::size_t>(dr - db);
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= lr * bc[j];
    ++exponent;
  }
  return UPoly(std::move(r));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  unsigned e = 0;
  UPoly r = scaled_remainder(a, b, e);
  const int delta = std::max(a.degree() - b.degree() + 1, 0);
  if (static_cast<int>(e) < delta) r *= ipow(b.leading(), static_cast<unsigned>(delta) - e);
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer c = boost::multiprecision::gcd(a.content(), b.content());
  UPoly p = a.primitive_part();
  UPoly q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    UPoly r = pseudo_remainder(p, q);
    p = std::move(q);
    q = r.primitive_part();
  }
  return p.primitive_part() * c;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() < 1) return out;
  UPoly f = p.primitive_part();
  UPoly df = f.derivative();
  UPoly a = gcd(f, df).primitive_part();
  UPoly b = exact_div(f, a);
  UPoly c = exact_div(df, a);
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d).primitive_part();
    out.push_back(g);
    UPoly nb = exact_div(b, g);
    c = exact_div(d, g);
    b = std::move(nb);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  for (auto& f_i : out)
    if (f_i.degree() == 0) f_i = UPoly(Integer(1));
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return UPoly(Integer(1));
  UPoly f = p.primitive_part();
  return exact_div(f, gcd(f, f.derivative()).primitive_part()).primitive_part();
}

}  // namespace tracepar
