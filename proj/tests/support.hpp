#pragma once

#include <random>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "tracepar/algebraic.hpp"
#include "tracepar/core.hpp"

namespace testing {

using Real = boost::multiprecision::mpfr_float_50;

/// Every relation on at most `k` letters, plus the named graphs.
inline std::vector<tracepar::DependenceGraph> small_graphs(int k = 4) {
  std::vector<tracepar::DependenceGraph> out;
  for (int n = 1; n <= k; ++n)
    for (auto& g : tracepar::all_graphs(n)) out.push_back(g);
  return out;
}

inline double distance(const tracepar::AlgebraicValue& v, const Real& expected) {
  tracepar::Interval iv = v.interval_for_digits(30);
  Real lo(iv.lo);
  Real hi(iv.hi);
  Real d = boost::multiprecision::max(abs(lo - expected), abs(hi - expected));
  return static_cast<double>(d);
}

inline std::vector<int> random_word(std::mt19937_64& rng, int letters, int length) {
  std::uniform_int_distribution<int> pick(0, letters - 1);
  std::vector<int> w(static_cast<std::size_t>(length));
  for (auto& a : w) a = pick(rng);
  return w;
}

}  // namespace testing
