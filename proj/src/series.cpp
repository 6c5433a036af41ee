#include "tracepar/series.hpp"

#include <algorithm>

#include "tracepar/bareiss.hpp"
#include "tracepar/errors.hpp"

namespace tracepar {

BPoly LinearRepresentation::entry(int i, int j) const {
  long m = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return BPoly::monomial(Integer(m), 1, length[static_cast<std::size_t>(i)]);
}

BPoly LinearRepresentation::v(int i) const { return BPoly::monomial(Integer(1), 1, length[static_cast<std::size_t>(i)]); }

LinearRepresentation linear_representation(const CliqueGraph& cg, const EquitablePartition* partition) {
  LinearRepresentation rep;
  if (!partition) {
    EquitablePartition p = discrete_partition(cg);
    rep.u.assign(p.cells.size(), Integer(1));
    rep.a = std::move(p.coloration);
    rep.length = std::move(p.cell_length);
    return rep;
  }
  for (const auto& cell : partition->cells)
    for (int v : cell)
      if (cg.length(v) != cg.length(cell.front())) throw ShapeError("cell mixes cliques of different sizes");
  auto check = is_equitable(cg, partition->cells);
  if (!check) throw ShapeError("partition is not equitable");
  for (const auto& cell : partition->cells) rep.u.emplace_back(static_cast<unsigned long>(cell.size()));
  rep.a = std::move(check->coloration);
  rep.length = std::move(check->cell_length);
  rep.reduced = partition->size() < cg.size();
  return rep;
}

LinearRepresentation reduced_representation(const DependenceGraph& g) {
  CliqueGraph cg = build_clique_graph(g);
  EquitablePartition p = coarsest_equitable_partition(cg);
  return linear_representation(cg, &p);
}

UPoly mobius_polynomial(const DependenceGraph& g) {
  std::vector<Integer> c(static_cast<std::size_t>(max_clique_size(g)) + 1);
  c[0] = 1;
  for (Mask m : enumerate_cliques(g)) {
    int s = popcount(m);
    c[static_cast<std::size_t>(s)] += (s % 2 == 0) ? 1 : -1;
  }
  return UPoly(std::move(c));
}

BivariateRational solve_F(const LinearRepresentation& rep) {
  const int n = rep.size();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<BPoly>> m(un, std::vector<BPoly>(un));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BPoly e = -rep.entry(i, j);
      if (i == j) e += BPoly(Integer(1));
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    }
  BPoly q = bareiss_determinant(m);
  // u Adj(M) v = -det([[M, v], [u, 0]])
  auto bordered = m;
  for (int i = 0; i < n; ++i) bordered[static_cast<std::size_t>(i)].push_back(rep.v(i));
  std::vector<BPoly> last;
  for (int j = 0; j < n; ++j) last.emplace_back(rep.u[static_cast<std::size_t>(j)]);
  last.emplace_back();
  bordered.push_back(std::move(last));
  BPoly nn = -bareiss_determinant(std::move(bordered));

  BivariateRational f;
  f.num = q + nn;
  f.den = q;
  BPoly g = gcd(f.num, f.den);
  if (g.degree_x() > 0 || g.degree_y() > 0) {
    f.num = exact_div(f.num, g);
    f.den = exact_div(f.den, g);
  }
  Integer c0 = f.den.coeff(0, 0);
  if (c0 < 0) {
    f.num = -f.num;
    f.den = -f.den;
    c0 = -c0;
  }
  if (c0 != 1) throw NumericError("denominator constant term is not a unit");
  f.cancelled = true;
  return f;
}

URational normalize(UPoly num, UPoly den) {
  if (den.is_zero()) throw NumericError("zero denominator");
  if (num.is_zero()) return {UPoly(), UPoly(Integer(1))};
  UPoly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  Integer c0 = den.coeff(0);
  if (c0 < 0) {
    num = -num;
    den = -den;
    c0 = -c0;
  }
  if (c0 != 1) throw NumericError("series denominator without a unit constant term");
  return {std::move(num), std::move(den)};
}

URational specialize(const BivariateRational& f, Specialization which) {
  const BPoly& p = f.num;
  const BPoly& q = f.den;
  switch (which) {
    case Specialization::L:
      return normalize(p.at_x1(), q.at_x1());
    case Specialization::H:
      return normalize(p.at_y1(), q.at_y1());
    case Specialization::G: {
      UPoly qq = q.at_x1();
      return normalize((p.dx() * q - p * q.dx()).at_x1(), qq * qq);
    }
    case Specialization::Gtilde: {
      UPoly qq = q.at_y1();
      return normalize((p.dy() * q - p * q.dy()).at_y1(), qq * qq);
    }
  }
  throw ShapeError("unknown specialization");
}

std::vector<Integer> series_coefficients(const URational& r, int n) {
  if (r.den.coeff(0) != 1) throw NumericError("series denominator must have constant term 1");
  std::vector<Integer> c(static_cast<std::size_t>(std::max(n, -1) + 1));
  for (int k = 0; k <= n; ++k) {
    Integer s = r.num.coeff(k);
    for (int j = 1; j <= std::min(k, r.den.degree()); ++j) s -= r.den.coeff(j) * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = std::move(s);
  }
  return c;
}

std::vector<Integer> length_recurrence(const URational& L, int N) { return series_coefficients(L, N); }

std::vector<Integer> CoefficientTable::length_totals() const {
  std::vector<Integer> t(static_cast<std::size_t>(max_length) + 1);
  for (const auto& row : f)
    for (std::size_t l = 0; l < row.size(); ++l) t[l] += row[l];
  return t;
}

std::vector<Integer> CoefficientTable::height_totals() const {
  std::vector<Integer> t;
  for (const auto& row : f) {
    Integer s = 0;
    for (const auto& c : row) s += c;
    t.push_back(s);
  }
  return t;
}

CoefficientTable coefficients(const LinearRepresentation& rep, int K, int N) {
  if (K < 0 || N < 0) throw ShapeError("negative coefficient bounds");
  const int n = rep.size();
  if (static_cast<double>(K) * (N + 1) * n * n > 4e9) throw ResourceError("coefficient table too large");
  CoefficientTable t;
  t.max_height = K;
  t.max_length = N;
  t.f.assign(static_cast<std::size_t>(K) + 1, std::vector<Integer>(static_cast<std::size_t>(N) + 1));
  t.f[0][0] = 1;
  const auto width = static_cast<std::size_t>(N) + 1;
  // r[i][l]: weighted paths of the current height ending in state i, before
  // the length of i is added
  std::vector<std::vector<Integer>> r(static_cast<std::size_t>(n), std::vector<Integer>(width));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][0] = rep.u[static_cast<std::size_t>(i)];
  for (int k = 1; k <= K; ++k) {
    std::vector<std::vector<Integer>> next(static_cast<std::size_t>(n), std::vector<Integer>(width));
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto li = static_cast<std::size_t>(rep.length[ui]);
      for (std::size_t l = 0; l + li < width; ++l) {
        const Integer& w = r[ui][l];
        if (w.is_zero()) continue;
        t.f[static_cast<std::size_t>(k)][l + li] += w;
        for (int j = 0; j < n; ++j) {
          long m = rep.a[ui][static_cast<std::size_t>(j)];
          if (m != 0) next[static_cast<std::size_t>(j)][l + li] += w * m;
        }
      }
    }
    r = std::move(next);
  }
  return t;
}

ExpandedRepresentation expand_representation(const CliqueGraph& cg) {
  ExpandedRepresentation e;
  std::vector<int> first(static_cast<std::size_t>(cg.size()));
  for (int c = 0; c < cg.size(); ++c) {
    first[static_cast<std::size_t>(c)] = e.size();
    for (int k = 1; k <= cg.length(c); ++k) e.states.emplace_back(c, k);
  }
  e.succ.resize(e.states.size());
  e.u.assign(e.states.size(), 0);
  e.v.assign(e.states.size(), 0);
  for (int c = 0; c < cg.size(); ++c) {
    const int f = first[static_cast<std::size_t>(c)];
    const int len = cg.length(c);
    e.u[static_cast<std::size_t>(f)] = 1;
    e.v[static_cast<std::size_t>(f + len - 1)] = 1;
    for (int k = 0; k + 1 < len; ++k) e.succ[static_cast<std::size_t>(f + k)].push_back(f + k + 1);
    auto& last = e.succ[static_cast<std::size_t>(f + len - 1)];
    // the self-loop of c in the graph of cliques gives the return arc
    for (int d : cg.succ[static_cast<std::size_t>(c)]) last.push_back(first[static_cast<std::size_t>(d)]);
    if (!cg.arc(c, c)) last.push_back(f);
    std::sort(last.begin(), last.end());
    last.erase(std::unique(last.begin(), last.end()), last.end());
  }
  return e;
}

UPoly det_I_minus_A1(const LinearRepresentation& rep) {
  const auto n = static_cast<std::size_t>(rep.size());
  std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      UPoly e = -UPoly::monomial(Integer(rep.a[i][j]), rep.length[i]);
      if (i == j) e += UPoly(Integer(1));
      m[i][j] = e;
    }
  return bareiss_determinant(std::move(m));
}

UPoly det_I_minus_yA(const ExpandedRepresentation& e) {
  const auto n = static_cast<std::size_t>(e.size());
  std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = UPoly(Integer(1));
    for (int j : e.succ[i]) m[i][static_cast<std::size_t>(j)] -= UPoly::variable();
  }
  return bareiss_determinant(std::move(m));
}

}  // namespace tracepar
