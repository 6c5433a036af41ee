#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracepar/algebraic.hpp"
#include "tracepar/core.hpp"
#include "tracepar/numeric.hpp"

namespace tracepar {

inline constexpr double kLetterStepCap = 1e8;
/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489;

enum class IntervalKind { statistical, rigorous, exact };
enum class StarMethod { mc, exact_n, closed_form, star_series, decomposition };

std::string to_string(IntervalKind k);
std::string to_string(StarMethod m);

struct LambdaStarEstimate {
  Rational point;
  Rational lo;
  Rational hi;
  IntervalKind kind = IntervalKind::statistical;
  StarMethod method = StarMethod::mc;
  long n = 0;
  int replicas = 0;
  std::uint64_t seed = 0;
  int truncation = 0;
  /// Set for closed forms that are irrational.
  std::optional<AlgebraicValue> value;
};

/// Mean of h(w)/n over uniform random words w of length n, with a 99%
/// normal-approximation interval. Finite-n values are biased estimates of
/// the limit.
LambdaStarEstimate mc_lambda_star(const DependenceGraph& g, long n, int replicas, std::uint64_t seed);

/// Average of h(w)/n over all words of length n.
Rational exact_expectation(const DependenceGraph& g, int n, double cap = kLetterStepCap);

/// Largest |Sigma_s|/|Sigma| times the estimate of component s, the
/// estimates given in component order.
LambdaStarEstimate decompose_lambda_star(const DependenceGraph& g, const std::vector<LambdaStarEstimate>& parts);

/// Products of free monoids (including the free commutative monoid) and the
/// cocktail party graphs; none otherwise.
std::optional<AlgebraicValue> closed_form_lambda_star(const DependenceGraph& g);

/// One letter depending on everything, the others pairwise independent.
/// Returns that letter.
std::optional<int> star_center(const DependenceGraph& g);

/// Rigorous bounds from the regeneration series truncated after i_max.
LambdaStarEstimate star_series_bounds(const DependenceGraph& g, int i_max);

}  // namespace tracepar
