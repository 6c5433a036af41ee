#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tracepar/numeric.hpp"

namespace tracepar {

/// Fraction-free determinant of a square matrix over an integral domain.
/// T needs ring operators, construction from Integer, exact_div and is_zero.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(Integer(1));
  T prev(Integer(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return T();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][k] = T();
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace tracepar
