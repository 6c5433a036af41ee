#pragma once

#include <cstdint>
#include <vector>

#include "tracepar/cliquegraph.hpp"
#include "tracepar/core.hpp"
#include "tracepar/numeric.hpp"

namespace tracepar {

/// Row-normalised adjacency or coloration matrix.
struct MarkovianMatrix {
  std::vector<std::vector<Rational>> p;
  /// Clique size of each state.
  std::vector<int> length;

  int size() const { return static_cast<int>(p.size()); }
};

MarkovianMatrix markovian_matrix(const CliqueGraph& cg);
MarkovianMatrix markovian_matrix(const EquitablePartition& partition);

/// Unique p with p M = p and sum 1; throws NumericError when the chain is not
/// irreducible (the system is singular).
std::vector<Rational> stationary_distribution(const MarkovianMatrix& m);

/// Solves x M = b for square M by exact elimination.
std::vector<Rational> solve_left(std::vector<std::vector<Rational>> m, std::vector<Rational> b);

struct StationaryResult {
  /// Limit distribution over the states of the matrix that was solved: the
  /// cells of the coarsest equitable partition for a connected graph, the
  /// cliques otherwise.
  std::vector<Rational> p;
  /// Absorption mass of each final component, ordered as the components of
  /// the dependence graph. A single 1 for connected graphs.
  std::vector<Rational> q;
  Rational lambda_cf;
  bool reduced = false;
};

/// `reduced` selects the coloration matrix of the coarsest equitable
/// partition for the connected pieces.
StationaryResult lambda_cf(const DependenceGraph& g, bool reduced = true);

/// Counter-based generator with a SplitMix64 output function.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Seed of shard `index` derived from a root seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct EmpiricalEstimate {
  double mean = 0;
  double stddev = 0;
  /// Total steps over total length. Differs from `mean` when the replicas
  /// end in different components.
  double pooled = 0;
  int replicas = 0;
  long steps = 0;
  std::uint64_t seed = 0;
};

/// Mean over replicas of m / |X_1 ... X_m| for the chain on cliques started
/// uniformly, and the pooled ratio.
EmpiricalEstimate empirical_cf_height(const DependenceGraph& g, long m, int replicas, std::uint64_t seed);

}  // namespace tracepar
