#include "tracepar/asymptotics.hpp"

#include <numeric>

#include "tracepar/errors.hpp"

namespace tracepar {

namespace {

UPoly scaled(const UPoly& p, const Integer& k) { return p * k; }

struct PoleOrders {
  unsigned num = 0;
  unsigned den = 0;
};

PoleOrders orders_at(const URational& s, const RealRoot& r) {
  return {multiplicity_at(s.num, r), multiplicity_at(s.den, r)};
}

}  // namespace

SingularityReport dominant_singularity(const URational& s, char tag, unsigned bits) {
  auto root = smallest_positive_root(s.den);
  if (!root) throw NumericError(std::string("series ") + tag + " has no positive pole");
  PoleOrders o = orders_at(s, *root);
  if (o.den <= o.num) throw NumericError(std::string("series ") + tag + " has no pole at its smallest positive root");
  SingularityReport rep{*root, AlgebraicValue::from_root(*root), static_cast<int>(o.den - o.num), {}, tag, false};
  rep.dominance_certified = certify_dominant(s.den, *root);

  // alpha = rho^-k / (k-1)! * (-1)^k num^(a)(rho) b! / (a! den^(b)(rho))
  const int k = rep.order;
  UPoly num = scaled(s.num.derivative(o.num), factorial(o.den));
  if (k % 2 == 1) num = -num;
  UPoly den = scaled(s.den.derivative(o.den) * UPoly::monomial(Integer(1), k),
                     factorial(static_cast<unsigned>(k - 1)) * factorial(o.num));
  rep.alpha = rational_function_at_root(*root, num, den, bits);
  return rep;
}

AlgebraicValue pole_limit(const URational& s, const SingularityReport& sing, int k, unsigned bits) {
  PoleOrders o = orders_at(s, sing.root);
  if (static_cast<int>(o.den) - static_cast<int>(o.num) != k)
    throw NumericError("pole order differs from the requested order");
  UPoly num = scaled(s.num.derivative(o.num), factorial(o.den));
  if (k % 2 == 1) num = -num;
  UPoly den = scaled(s.den.derivative(o.den), factorial(o.num));
  return rational_function_at_root(sing.root, num, den, bits);
}

AlgebraicValue average_at_pole(const URational& s, const URational& g, const SingularityReport& sing,
                               unsigned bits) {
  const int k = sing.order;
  PoleOrders os = orders_at(s, sing.root);
  PoleOrders og = orders_at(g, sing.root);
  if (static_cast<int>(og.den) - static_cast<int>(og.num) != k + 1)
    throw NumericError("derivative series has an unexpected pole order");
  // the signs (-1)^(k+1) and (-1)^k leave one minus sign
  UPoly num = -scaled(g.num.derivative(og.num) * s.den.derivative(os.den), factorial(og.den) * factorial(os.num));
  UPoly den = scaled(g.den.derivative(og.den) * s.num.derivative(os.num) * UPoly::variable(),
                     factorial(og.num) * factorial(os.den) * k);
  return rational_function_at_root(sing.root, num, den, bits);
}

GraphSeries graph_series(const DependenceGraph& g) {
  GraphSeries s;
  s.F = solve_F(reduced_representation(g));
  s.L = specialize(s.F, Specialization::L);
  s.H = specialize(s.F, Specialization::H);
  s.G = specialize(s.F, Specialization::G);
  s.Gtilde = specialize(s.F, Specialization::Gtilde);
  return s;
}

AlgebraicValue lambda_M_direct(const DependenceGraph& g, unsigned bits) {
  GraphSeries s = graph_series(g);
  SingularityReport sing = dominant_singularity(s.L, 'L', bits);
  return average_at_pole(s.L, s.G, sing, bits);
}

AlgebraicValue gamma_M_direct(const DependenceGraph& g, unsigned bits) {
  GraphSeries s = graph_series(g);
  SingularityReport sing = dominant_singularity(s.H, 'H', bits);
  return average_at_pole(s.H, s.Gtilde, sing, bits);
}

Mask minimal_length_components(const DependenceGraph& g) {
  std::vector<Mask> comps = connected_components(g);
  std::vector<RealRoot> roots;
  for (Mask c : comps) {
    auto r = smallest_positive_root(mobius_polynomial(induced(g, c)));
    if (!r) throw NumericError("Mobius polynomial without a positive root");
    roots.push_back(*r);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (compare_roots(roots[i], roots[best]) < 0) best = i;
  Mask j = 0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (compare_roots(roots[i], roots[best]) == 0) j |= comps[i];
  return j;
}

AlgebraicValue lambda_M(const DependenceGraph& g, unsigned bits) {
  if (is_connected(g)) return lambda_M_direct(g, bits);
  return lambda_M_direct(induced(g, minimal_length_components(g)), bits);
}

AlgebraicValue gamma_M(const DependenceGraph& g, unsigned bits) {
  if (is_connected(g)) return gamma_M_direct(g, bits);
  if (is_free_commutative(g)) return AlgebraicValue::from_rational(Rational(g.size() + 1, 2));
  std::vector<Mask> comps = connected_components(g);
  long singles = 0;
  AlgebraicValue total = AlgebraicValue::from_rational(Rational(0));
  for (Mask c : comps) {
    if (popcount(c) == 1) {
      ++singles;
      continue;
    }
    total = total + gamma_M_direct(induced(g, c), bits);
  }
  return total + Rational(singles, 2);
}

ComponentAsymptotics component_asymptotics(const DependenceGraph& g, unsigned bits) {
  ComponentAsymptotics out;
  out.components = connected_components(g);
  for (Mask c : out.components) {
    GraphSeries s = graph_series(induced(g, c));
    out.L.push_back(dominant_singularity(s.L, 'L', bits));
    out.H.push_back(dominant_singularity(s.H, 'H', bits));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.L.size(); ++i)
    if (compare_roots(out.L[i].root, out.L[best].root) < 0) best = i;
  out.rho_L = out.L[best].rho;
  for (const auto& r : out.L)
    if (compare_roots(r.root, out.L[best].root) == 0) ++out.k_L;

  AlgebraicValue prod = AlgebraicValue::from_rational(Rational(1));
  int singles = 0;
  for (std::size_t i = 0; i < out.H.size(); ++i) {
    prod = prod * out.H[i].rho;
    if (popcount(out.components[i]) == 1) ++singles;
  }
  out.rho_H = prod;
  out.k_H = is_free_commutative(g) ? g.size() : 1 + singles;
  return out;
}

Extrapolation extrapolate_ratio(const URational& s, const URational& g, int n_max, int stride, int order) {
  if (order < 1 || stride < 1 || n_max - order * stride < 1) throw ShapeError("bad extrapolation parameters");
  std::vector<Integer> sc = series_coefficients(s, n_max);
  std::vector<Integer> gc = series_coefficients(g, n_max);
  std::vector<Rational> h;
  std::vector<Rational> r;
  for (int j = 0; j <= order; ++j) {
    int n = n_max - j * stride;
    const auto un = static_cast<std::size_t>(n);
    if (sc[un].is_zero()) throw NumericError("vanishing series coefficient in extrapolation");
    h.emplace_back(1, n);
    r.push_back(Rational(gc[un]) / (Rational(n) * Rational(sc[un])));
  }
  // Neville's scheme evaluated at h = 0
  auto neville = [&](int m) {
    std::vector<Rational> p(r.begin(), r.begin() + m + 1);
    for (int w = 1; w <= m; ++w)
      for (int i = 0; i + w <= m; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(i + w);
        p[ui] = (h[ui] * p[ui + 1] - h[uj] * p[ui]) / (h[ui] - h[uj]);
      }
    return p[0];
  };
  Extrapolation e;
  e.estimate = neville(order);
  e.error = abs(e.estimate - neville(order - 1));
  e.n_max = n_max;
  e.stride = stride;
  e.order = order;
  return e;
}

Extrapolation extrapolate_average(const DependenceGraph& g, Average which, int N) {
  if (N < 4) throw ShapeError("extrapolation needs N >= 4");
  GraphSeries s = graph_series(g);
  const int order = 4;
  // Counts over components that are free monoids mix through max(), which
  // makes the finite-n ratios quasi-periodic; sample on one residue class.
  int free_parts = 0;
  for (Mask c : connected_components(g))
    if (is_free(induced(g, c))) ++free_parts;
  long stride = 1;
  for (int i = 2; i <= std::min(free_parts, 8); ++i) stride = std::lcm(stride, static_cast<long>(i));
  N = std::max<long>(N, 8 * stride * order);
  const int st = static_cast<int>(stride);
  if (which == Average::lambda_M) return extrapolate_ratio(s.L, s.G, N, st, order);
  return extrapolate_ratio(s.H, s.Gtilde, N, st, order);
}

}  // namespace tracepar
