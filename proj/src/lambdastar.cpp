#include "tracepar/lambdastar.hpp"

#include <algorithm>
#include <cmath>

#include "tracepar/errors.hpp"
#include "tracepar/markov.hpp"

namespace tracepar {

std::string to_string(IntervalKind k) {
  switch (k) {
    case IntervalKind::statistical:
      return "statistical";
    case IntervalKind::rigorous:
      return "rigorous";
    case IntervalKind::exact:
      return "exact";
  }
  return "unknown";
}

std::string to_string(StarMethod m) {
  switch (m) {
    case StarMethod::mc:
      return "mc";
    case StarMethod::exact_n:
      return "exact_n";
    case StarMethod::closed_form:
      return "closed_form";
    case StarMethod::star_series:
      return "star_series";
    case StarMethod::decomposition:
      return "decomposition";
  }
  return "unknown";
}

namespace {

Rational from_double(double v) { return Rational(v); }

}  // namespace

LambdaStarEstimate mc_lambda_star(const DependenceGraph& g, long n, int replicas, std::uint64_t seed) {
  if (n < 1 || replicas < 1) throw ShapeError("Monte Carlo needs n >= 1 and replicas >= 1");
  const auto k = static_cast<std::uint64_t>(g.size());
  Integer total = 0;
  double sum = 0;
  double sum_sq = 0;
  for (int r = 0; r < replicas; ++r) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    HeapState s(g.size());
    for (long i = 0; i < n; ++i) heap_push_inplace(s, static_cast<int>(rng.below(k)), g);
    total += s.max;
    double v = static_cast<double>(s.max) / static_cast<double>(n);
    sum += v;
    sum_sq += v * v;
  }
  LambdaStarEstimate e;
  e.method = StarMethod::mc;
  e.kind = IntervalKind::statistical;
  e.n = n;
  e.replicas = replicas;
  e.seed = seed;
  e.point = make_rational(total, Integer(Integer(n) * replicas));
  const double mean = sum / replicas;
  const double var = replicas > 1 ? std::max(0.0, (sum_sq - replicas * mean * mean) / (replicas - 1)) : 0.0;
  const Rational half = from_double(kZ99 * std::sqrt(var / replicas));
  e.lo = e.point - half;
  e.hi = e.point + half;
  return e;
}

Rational exact_expectation(const DependenceGraph& g, int n, double cap) {
  if (n < 1) throw ShapeError("word length must be positive");
  const int k = g.size();
  double steps = 0;
  double level = 1;
  for (int j = 1; j <= n; ++j) {
    level *= k;
    steps += level;
  }
  if (steps > cap) throw ResourceError("exhaustive word enumeration exceeds the letter-step cap");

  Integer total = 0;
  std::vector<HeapState> stack(static_cast<std::size_t>(n) + 1, HeapState(k));
  // heights at the last position are read off without updating the state
  auto walk = [&](auto&& self, int depth) -> void {
    const HeapState& s = stack[static_cast<std::size_t>(depth)];
    if (depth == n - 1) {
      for (int a = 0; a < k; ++a) {
        long top = 0;
        for (int b : members(g.dep(a))) top = std::max(top, s.tops[static_cast<std::size_t>(b)]);
        total += std::max(s.max, top + 1);
      }
      return;
    }
    for (int a = 0; a < k; ++a) {
      stack[static_cast<std::size_t>(depth) + 1] = heap_push(s, a, g);
      self(self, depth + 1);
    }
  };
  walk(walk, 0);
  return make_rational(total, Integer(Integer(n) * ipow(Integer(k), static_cast<unsigned>(n))));
}

LambdaStarEstimate decompose_lambda_star(const DependenceGraph& g, const std::vector<LambdaStarEstimate>& parts) {
  std::vector<Mask> comps = connected_components(g);
  if (parts.size() != comps.size()) throw ShapeError("missing component estimate");
  LambdaStarEstimate out;
  out.method = StarMethod::decomposition;
  out.kind = IntervalKind::exact;
  bool first = true;
  for (std::size_t s = 0; s < comps.size(); ++s) {
    Rational w(popcount(comps[s]), g.size());
    const auto& p = parts[s];
    if (first || w * p.point > out.point) out.point = w * p.point;
    if (first || w * p.lo > out.lo) out.lo = w * p.lo;
    if (first || w * p.hi > out.hi) out.hi = w * p.hi;
    first = false;
    // the weakest guarantee among the parts carries over
    if (p.kind == IntervalKind::statistical || out.kind == IntervalKind::statistical)
      out.kind = IntervalKind::statistical;
    else if (p.kind == IntervalKind::rigorous)
      out.kind = IntervalKind::rigorous;
    out.n = std::max(out.n, p.n);
    out.replicas = std::max(out.replicas, p.replicas);
    out.truncation = std::max(out.truncation, p.truncation);
    out.seed = p.seed;
  }
  return out;
}

std::optional<AlgebraicValue> closed_form_lambda_star(const DependenceGraph& g) {
  std::vector<Mask> comps = connected_components(g);
  bool all_free = true;
  int largest = 0;
  for (Mask c : comps) {
    all_free = all_free && is_free(induced(g, c));
    largest = std::max(largest, popcount(c));
  }
  if (all_free) return AlgebraicValue::from_rational(Rational(largest, g.size()));

  if (comps.size() == 1 && g.size() % 2 == 0 && g.size() >= 4 && isomorphic(g, cocktail_party(g.size() / 2))) {
    // 1/2 (1 + sqrt((n-1)/(n+1))) is the root above 1/2 of 2(n+1)v^2 - 2(n+1)v + 1
    const long n = g.size() / 2;
    UPoly p({1, -2 * (n + 1), 2 * (n + 1)});
    return AlgebraicValue::from_root(RealRoot(p, Rational(1, 2), Rational(1)));
  }
  return std::nullopt;
}

std::optional<int> star_center(const DependenceGraph& g) {
  for (int a = 0; a < g.size(); ++a) {
    if (g.dep(a) != g.all()) continue;
    bool ok = true;
    for (int b = 0; b < g.size() && ok; ++b)
      if (b != a) ok = g.dep(b) == ((Mask{1} << a) | (Mask{1} << b));
    if (ok) return a;
  }
  return std::nullopt;
}

LambdaStarEstimate star_series_bounds(const DependenceGraph& g, int i_max) {
  if (!star_center(g)) throw ShapeError("graph is not star-shaped");
  if (i_max < 0) throw ShapeError("negative truncation");
  const int k = g.size();
  const int m = k - 1;
  const auto top = static_cast<std::size_t>(i_max);

  std::vector<std::vector<Integer>> binom(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    binom[i].resize(i + 1);
    binom[i][0] = binom[i][i] = 1;
    for (std::size_t j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  std::vector<Integer> mpow(top + 1);
  mpow[0] = 1;
  for (std::size_t i = 1; i <= top; ++i) mpow[i] = mpow[i - 1] * m;

  // sum over words of length i of max(letter counts) = sum over M < i of
  // the words with some count above M; words with all counts <= M come
  // from an m-fold binomial convolution
  std::vector<Integer> s(top + 1, Integer(0));
  if (m == 1) {
    for (std::size_t i = 0; i <= top; ++i) s[i] = static_cast<unsigned long>(i);
  } else if (m > 1) {
    for (std::size_t M = 0; M < top; ++M) {
      std::vector<Integer> cur(top + 1, Integer(0));
      for (std::size_t i = 0; i <= std::min(M, top); ++i) cur[i] = 1;
      for (int l = 1; l < m; ++l) {
        std::vector<Integer> next(top + 1, Integer(0));
        for (std::size_t i = 0; i <= top; ++i) {
          if (cur[i].is_zero()) continue;
          for (std::size_t j = 0; j <= M && i + j <= top; ++j) next[i + j] += binom[i + j][j] * cur[i];
        }
        cur = std::move(next);
      }
      for (std::size_t i = M + 1; i <= top; ++i) s[i] += mpow[i] - cur[i];
    }
  }

  Rational sum = 0;
  Integer kp = 1;
  for (std::size_t i = 0; i <= top; ++i) {
    if (!s[i].is_zero()) sum += make_rational(s[i], kp);
    kp *= k;
  }
  const Rational k2(1, static_cast<long>(k) * k);
  Rational lo = Rational(1, k) + k2 * sum;

  // tail bound from max <= i: sum_{i > I} i r^i with r = m/k
  Rational rem = 0;
  if (m > 0) {
    const Rational r(m, k);
    Rational rp = 1;
    for (int i = 0; i <= i_max; ++i) rp *= r;
    rem = rp * (Rational(i_max + 1) - Rational(i_max) * r) / ((1 - r) * (1 - r));
  }
  LambdaStarEstimate e;
  e.method = StarMethod::star_series;
  e.kind = IntervalKind::rigorous;
  e.truncation = i_max;
  e.lo = lo;
  e.hi = lo + k2 * rem;
  e.point = (e.lo + e.hi) / 2;
  return e;
}

}  // namespace tracepar
