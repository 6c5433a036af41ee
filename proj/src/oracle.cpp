#include "tracepar/oracle.hpp"

#include <set>

#include "tracepar/errors.hpp"

namespace tracepar {

namespace {

TraceCensus empty_census(int N) {
  if (N < 0) throw ShapeError("negative maximal length");
  TraceCensus c;
  c.max_length = N;
  c.counts.assign(static_cast<std::size_t>(N) + 1, std::vector<Integer>(static_cast<std::size_t>(N) + 1));
  c.counts[0][0] = 1;
  return c;
}

}  // namespace

std::vector<Integer> TraceCensus::per_length() const {
  std::vector<Integer> t(static_cast<std::size_t>(max_length) + 1);
  for (const auto& row : counts)
    for (std::size_t l = 0; l < row.size(); ++l) t[l] += row[l];
  return t;
}

std::vector<Integer> TraceCensus::per_height() const {
  std::vector<Integer> t;
  for (const auto& row : counts) {
    Integer s = 0;
    for (const auto& v : row) s += v;
    t.push_back(s);
  }
  return t;
}

TraceCensus enumerate_traces(const DependenceGraph& g, int N, double cap) {
  TraceCensus c = empty_census(N);
  const std::vector<Mask> cliques = enumerate_cliques(g);
  // by_length[l] holds the traces of length l still to be extended
  std::vector<std::vector<Trace>> by_length(static_cast<std::size_t>(N) + 1);
  by_length[0].push_back(Trace{});
  double produced = 0;
  for (int l = 0; l <= N; ++l) {
    auto& level = by_length[static_cast<std::size_t>(l)];
    for (const Trace& t : level) {
      if (l > 0) c.counts[static_cast<std::size_t>(t.height())][static_cast<std::size_t>(l)] += 1;
      for (Mask q : cliques) {
        int len = l + popcount(q);
        if (len > N) continue;
        if (!t.factors.empty() && !is_cf_admissible(t.factors.back(), q, g)) continue;
        if (++produced > cap) throw ResourceError("trace enumeration exceeds its cap");
        Trace u = t;
        u.factors.push_back(q);
        by_length[static_cast<std::size_t>(len)].push_back(std::move(u));
      }
    }
    std::vector<Trace>().swap(level);
  }
  return c;
}

TraceCensus census_by_words(const DependenceGraph& g, int N, double cap) {
  TraceCensus c = empty_census(N);
  const int k = g.size();
  double words = 0;
  double level = 1;
  for (int n = 1; n <= N; ++n) {
    level *= k;
    words += level;
  }
  if (words > cap) throw ResourceError("word enumeration exceeds its cap");
  for (int n = 1; n <= N; ++n) {
    std::set<Trace> seen;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    while (true) {
      seen.insert(project_word(g, w));
      int i = n - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == k - 1) w[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++w[static_cast<std::size_t>(i)];
    }
    for (const Trace& t : seen) c.counts[static_cast<std::size_t>(t.height())][static_cast<std::size_t>(n)] += 1;
  }
  return c;
}

}  // namespace tracepar
