#pragma once

#include <vector>

#include "tracepar/core.hpp"
#include "tracepar/numeric.hpp"

namespace tracepar {

inline constexpr double kTraceCap = 2e7;

/// Trace counts by (height, length) for lengths up to max_length.
struct TraceCensus {
  int max_length = 0;
  /// counts[k][l] for 0 <= k, l <= max_length.
  std::vector<std::vector<Integer>> counts;

  const Integer& at(int k, int l) const {
    return counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }
  std::vector<Integer> per_length() const;
  std::vector<Integer> per_height() const;
  friend bool operator==(const TraceCensus&, const TraceCensus&) = default;
};

/// Grows CF normal forms clique by clique from the empty trace.
TraceCensus enumerate_traces(const DependenceGraph& g, int N, double cap = kTraceCap);
/// Projects every word of length <= N and counts distinct traces.
TraceCensus census_by_words(const DependenceGraph& g, int N, double cap = kTraceCap);

}  // namespace tracepar
