#include "tracepar/markov.hpp"

#include <cmath>

#include "tracepar/errors.hpp"

namespace tracepar {

namespace {

MarkovianMatrix normalise_rows(const std::vector<std::vector<long>>& a, std::vector<int> length) {
  MarkovianMatrix m;
  m.length = std::move(length);
  for (const auto& row : a) {
    long total = 0;
    for (long v : row) total += v;
    if (total <= 0) throw GraphError("state without successor");
    std::vector<Rational> r;
    r.reserve(row.size());
    for (long v : row) r.emplace_back(v, total);
    m.p.push_back(std::move(r));
  }
  return m;
}

Rational mean_length(const std::vector<Rational>& p, const std::vector<int>& length) {
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * length[i];
  return s;
}

StationaryResult connected_lambda_cf(const DependenceGraph& g, bool reduced) {
  CliqueGraph cg = build_clique_graph(g);
  MarkovianMatrix m = reduced ? markovian_matrix(coarsest_equitable_partition(cg)) : markovian_matrix(cg);
  StationaryResult out;
  out.p = stationary_distribution(m);
  out.q = {Rational(1)};
  out.lambda_cf = 1 / mean_length(out.p, m.length);
  out.reduced = reduced;
  return out;
}

}  // namespace

MarkovianMatrix markovian_matrix(const CliqueGraph& cg) {
  const auto n = static_cast<std::size_t>(cg.size());
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  std::vector<int> length;
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : cg.succ[i]) a[i][static_cast<std::size_t>(j)] = 1;
    length.push_back(cg.length(static_cast<int>(i)));
  }
  return normalise_rows(a, std::move(length));
}

MarkovianMatrix markovian_matrix(const EquitablePartition& partition) {
  return normalise_rows(partition.coloration, partition.cell_length);
}

std::vector<Rational> solve_left(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw ShapeError("dimension mismatch in linear solve");
  // transpose so that the unknowns index columns
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ShapeError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  }
  for (std::size_t j = 0; j < n; ++j) t[j][n] = b[j];
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && t[piv][c] == 0) ++piv;
    if (piv == n) throw NumericError("singular linear system");
    std::swap(t[piv], t[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || t[r][c] == 0) continue;
      Rational f = t[r][c] / t[c][c];
      for (std::size_t k = c; k <= n; ++k) t[r][k] -= f * t[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = t[i][n] / t[i][i];
  return x;
}

std::vector<Rational> stationary_distribution(const MarkovianMatrix& m) {
  const auto n = static_cast<std::size_t>(m.size());
  if (n == 0) throw ShapeError("empty chain");
  // x (M - I) = 0 with the last equation replaced by sum x = 1
  std::vector<std::vector<Rational>> a = m.p;
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] -= 1;
    a[i][n - 1] = 1;
  }
  std::vector<Rational> b(n, Rational(0));
  b[n - 1] = 1;
  return solve_left(std::move(a), std::move(b));
}

StationaryResult lambda_cf(const DependenceGraph& g, bool reduced) {
  if (is_connected(g)) return connected_lambda_cf(g, reduced);

  CliqueGraph cg = build_clique_graph(g);
  MarkovianMatrix m = markovian_matrix(cg);
  Condensation cond = condensation(cg);
  std::vector<Mask> comps = connected_components(g);
  const auto n = static_cast<std::size_t>(cg.size());

  // final components of the condensation, keyed by graph component
  std::vector<int> final_of(comps.size(), -1);
  std::vector<bool> absorbed(n, false);
  for (std::size_t c = 0; c < cond.components.size(); ++c) {
    if (!cond.final[c]) continue;
    Mask first = cg.nodes[static_cast<std::size_t>(cond.components[c].front())];
    for (std::size_t s = 0; s < comps.size(); ++s)
      if ((first & comps[s]) == first) final_of[s] = static_cast<int>(c);
    for (int v : cond.components[c]) absorbed[static_cast<std::size_t>(v)] = true;
  }
  for (int f : final_of)
    if (f < 0) throw GraphError("graph component without a final strongly connected component");

  // x (I - B) = uniform start
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1;
    if (!absorbed[i])
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= m.p[i][j];
  }
  std::vector<Rational> x = solve_left(std::move(a), std::vector<Rational>(n, Rational(1, static_cast<long>(n))));

  StationaryResult out;
  out.reduced = reduced;
  out.p.assign(n, Rational(0));
  Rational inverse = 0;
  for (std::size_t s = 0; s < comps.size(); ++s) {
    const auto& nodes = cond.components[static_cast<std::size_t>(final_of[s])];
    Rational q = 0;
    for (int v : nodes) q += x[static_cast<std::size_t>(v)];
    out.q.push_back(q);

    MarkovianMatrix local;
    for (int v : nodes) {
      std::vector<Rational> row;
      for (int w : nodes) row.push_back(m.p[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]);
      local.p.push_back(std::move(row));
      local.length.push_back(cg.length(v));
    }
    std::vector<Rational> ps = stationary_distribution(local);
    for (std::size_t i = 0; i < nodes.size(); ++i) out.p[static_cast<std::size_t>(nodes[i])] = q * ps[i];

    Rational ls = connected_lambda_cf(induced(g, comps[s]), reduced).lambda_cf;
    inverse += q / ls;
  }
  out.lambda_cf = 1 / inverse;
  return out;
}

SplitMix64::result_type SplitMix64::operator()() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw ShapeError("empty range");
  // rejection keeps the draw unbiased
  const std::uint64_t limit = max() - max() % n;
  std::uint64_t r = 0;
  do r = (*this)();
  while (r >= limit);
  return r % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 a(seed);
  SplitMix64 b(a() ^ (index * 0xd1b54a32d192ed03ULL));
  return b();
}

EmpiricalEstimate empirical_cf_height(const DependenceGraph& g, long m, int replicas, std::uint64_t seed) {
  if (m < 1 || replicas < 1) throw ShapeError("simulation needs m >= 1 and replicas >= 1");
  CliqueGraph cg = build_clique_graph(g);
  const auto n = static_cast<std::uint64_t>(cg.size());
  double sum = 0;
  double sum_sq = 0;
  double length_sum = 0;
  for (int r = 0; r < replicas; ++r) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    auto state = static_cast<std::size_t>(rng.below(n));
    long total = cg.length(static_cast<int>(state));
    for (long step = 1; step < m; ++step) {
      const auto& s = cg.succ[state];
      state = static_cast<std::size_t>(s[static_cast<std::size_t>(rng.below(s.size()))]);
      total += cg.length(static_cast<int>(state));
    }
    length_sum += static_cast<double>(total);
    double v = static_cast<double>(m) / static_cast<double>(total);
    sum += v;
    sum_sq += v * v;
  }
  EmpiricalEstimate e;
  e.replicas = replicas;
  e.steps = m;
  e.seed = seed;
  e.mean = sum / replicas;
  e.pooled = static_cast<double>(m) * replicas / length_sum;
  e.stddev = replicas > 1 ? std::sqrt(std::max(0.0, (sum_sq - replicas * e.mean * e.mean) / (replicas - 1))) : 0.0;
  return e;
}

}  // namespace tracepar
