#include "tracepar/bpoly.hpp"

#include <algorithm>
#include <sstream>

#include "tracepar/errors.hpp"

namespace tracepar {

BPoly::BPoly(std::vector<UPoly> rows) : rows_(std::move(rows)) { trim(); }

BPoly::BPoly(const Integer& constant) {
  if (!constant.is_zero()) rows_.emplace_back(constant);
}

BPoly BPoly::monomial(const Integer& c, int i, int j) {
  if (c.is_zero()) return {};
  std::vector<UPoly> r(static_cast<std::size_t>(i) + 1);
  r.back() = UPoly::monomial(c, j);
  return BPoly(std::move(r));
}

BPoly BPoly::from_y(const UPoly& p) { return BPoly(std::vector<UPoly>{p}); }

BPoly BPoly::from_x(const UPoly& p) {
  std::vector<UPoly> r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return BPoly(std::move(r));
}

void BPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int BPoly::degree_y() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

UPoly BPoly::row(int i) const {
  if (i < 0 || i >= static_cast<int>(rows_.size())) return {};
  return rows_[static_cast<std::size_t>(i)];
}

std::map<std::pair<int, int>, Integer> BPoly::terms() const {
  std::map<std::pair<int, int>, Integer> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& c = rows_[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) out[{static_cast<int>(i), static_cast<int>(j)}] = c[j];
  }
  return out;
}

BPoly& BPoly::operator+=(const BPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
  trim();
  return *this;
}

BPoly& BPoly::operator*=(const Integer& k) {
  for (auto& r : rows_) r *= k;
  trim();
  return *this;
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& row : r.rows_) row = -row;
  return r;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> r(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) r[i + j] += a.rows_[i] * b.rows_[j];
  }
  return BPoly(std::move(r));
}

BPoly BPoly::times_y(const UPoly& p) const {
  std::vector<UPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(row * p);
  return BPoly(std::move(r));
}

BPoly BPoly::shift_x(int k) const {
  if (is_zero()) return {};
  std::vector<UPoly> r(static_cast<std::size_t>(k));
  r.insert(r.end(), rows_.begin(), rows_.end());
  return BPoly(std::move(r));
}

UPoly BPoly::at_x1() const {
  UPoly s;
  for (const auto& r : rows_) s += r;
  return s;
}

UPoly BPoly::at_y1() const {
  std::vector<Integer> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(r.eval(Integer(1)));
  return UPoly(std::move(c));
}

BPoly BPoly::dx() const {
  if (rows_.size() <= 1) return {};
  std::vector<UPoly> r;
  for (std::size_t i = 1; i < rows_.size(); ++i) r.push_back(rows_[i] * Integer(static_cast<unsigned long>(i)));
  return BPoly(std::move(r));
}

BPoly BPoly::dy() const {
  std::vector<UPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(row.derivative());
  return BPoly(std::move(r));
}

Integer BPoly::eval(const Integer& x, const Integer& y) const {
  Integer acc = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + it->eval(y);
  return acc;
}

UPoly BPoly::content_x() const {
  UPoly g;
  for (const auto& r : rows_) {
    g = gcd(g, r);
    if (g.degree() == 0 && g.leading() == 1) break;
  }
  if (!g.is_zero() && g.leading() < 0) g = -g;
  return g;
}

BPoly BPoly::primitive_part_x() const {
  if (is_zero()) return {};
  return exact_div_y(*this, content_x());
}

std::string BPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms()) {
    const auto [i, j] = key;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool mono = i > 0 || j > 0;
    if (!mono || mag != 1) os << mag;
    if (mono && mag != 1) os << "*";
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    if (i > 0 && j > 0) os << "*";
    if (j > 0) {
      os << "y";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

bool is_zero(const BPoly& p) { return p.is_zero(); }

BPoly exact_div_y(const BPoly& a, const UPoly& d) {
  std::vector<UPoly> r;
  r.reserve(a.rows().size());
  for (const auto& row : a.rows()) r.push_back(exact_div(row, d));
  return BPoly(std::move(r));
}

BPoly exact_div(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw NumericError("bivariate division by zero");
  if (a.is_zero()) return {};
  if (a.degree_x() < b.degree_x()) throw NumericError("inexact bivariate division");
  std::vector<UPoly> rem = a.rows();
  const auto& br = b.rows();
  const UPoly& lb = br.back();
  std::vector<UPoly> q(static_cast<std::size_t>(a.degree_x() - b.degree_x()) + 1);
  for (int i = a.degree_x(); i >= b.degree_x(); --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (rem[ui].is_zero()) continue;
    UPoly t = exact_div(rem[ui], lb);
    const auto shift = ui - br.size() + 1;
    for (std::size_t j = 0; j < br.size(); ++j) rem[shift + j] -= t * br[j];
    q[shift] = std::move(t);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw NumericError("inexact bivariate division");
  return BPoly(std::move(q));
}

namespace {

BPoly pseudo_remainder_x(const BPoly& a, const BPoly& b) {
  std::vector<UPoly> r = a.rows();
  const auto& br = b.rows();
  const UPoly& lb = br.back();
  const int db = b.degree_x();
  auto deg = [&r]() {
    int d = static_cast<int>(r.size()) - 1;
    while (d >= 0 && r[static_cast<std::size_t>(d)].is_zero()) --d;
    return d;
  };
  for (int dr = deg(); dr >= db; dr = deg()) {
    UPoly lr = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb;
    const auto shift = static_cast<std::size_t>(dr - db);
    for (std::size_t j = 0; j < br.size(); ++j) r[shift + j] -= lr * br[j];
    r.resize(static_cast<std::size_t>(dr));
  }
  return BPoly(std::move(r));
}

}  // namespace

BPoly gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UPoly c = gcd(a.content_x(), b.content_x());
  BPoly p = a.primitive_part_x();
  BPoly q = b.primitive_part_x();
  if (p.degree_x() < q.degree_x()) std::swap(p, q);
  while (!q.is_zero() && q.degree_x() > 0) {
    BPoly r = pseudo_remainder_x(p, q);
    p = std::move(q);
    q = r.is_zero() ? r : r.primitive_part_x();
  }
  // q constant in x and non-zero: the primitive gcd is 1
  BPoly g = q.is_zero() ? p.primitive_part_x() : BPoly(Integer(1));
  return g.times_y(c);
}

}  // namespace tracepar
