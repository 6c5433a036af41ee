#pragma once

#include <vector>

#include "tracepar/algebraic.hpp"
#include "tracepar/core.hpp"
#include "tracepar/series.hpp"

namespace tracepar {

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Smallest positive pole of a rational series.
struct SingularityReport {
  RealRoot root;
  AlgebraicValue rho;
  int order = 0;
  AlgebraicValue alpha;
  char series = 'L';
  /// Every other pole was shown to have strictly larger modulus.
  bool dominance_certified = false;
};

SingularityReport dominant_singularity(const URational& s, char tag, unsigned bits = kDefaultPrecisionBits);

/// lim S(y)(rho - y)^k at the dominant pole, k its order.
AlgebraicValue pole_limit(const URational& s, const SingularityReport& sing, int k, unsigned bits);

/// [G (rho-y)^(k+1)] / (k rho [S (rho-y)^k]) at rho = rho_S.
AlgebraicValue average_at_pole(const URational& s, const URational& g, const SingularityReport& sing,
                               unsigned bits);

/// F and its specializations, from the reduced representation.
struct GraphSeries {
  BivariateRational F;
  URational L;
  URational H;
  URational G;
  URational Gtilde;
};

GraphSeries graph_series(const DependenceGraph& g);

/// Average length per height step, the same formula on the whole graph
/// without decomposition.
AlgebraicValue lambda_M_direct(const DependenceGraph& g, unsigned bits = kDefaultPrecisionBits);
AlgebraicValue gamma_M_direct(const DependenceGraph& g, unsigned bits = kDefaultPrecisionBits);

/// Component decomposition: the minimal-radius components for lambda_M,
/// the additive rule for gamma_M.
AlgebraicValue lambda_M(const DependenceGraph& g, unsigned bits = kDefaultPrecisionBits);
AlgebraicValue gamma_M(const DependenceGraph& g, unsigned bits = kDefaultPrecisionBits);

/// Letters of the components attaining the minimal rho_L.
Mask minimal_length_components(const DependenceGraph& g);

struct ComponentAsymptotics {
  std::vector<Mask> components;
  std::vector<SingularityReport> L;
  std::vector<SingularityReport> H;
  AlgebraicValue rho_L;
  int k_L = 0;
  AlgebraicValue rho_H;
  int k_H = 0;
};

/// Per-component singularities combined by the min and product rules.
ComponentAsymptotics component_asymptotics(const DependenceGraph& g, unsigned bits = kDefaultPrecisionBits);

enum class Average { lambda_M, gamma_M };

struct Extrapolation {
  Rational estimate;
  /// Difference between the two highest extrapolation orders.
  Rational error;
  int n_max = 0;
  int stride = 1;
  int order = 0;
};

/// Neville extrapolation in 1/n of G_n / (n S_n).
Extrapolation extrapolate_ratio(const URational& s, const URational& g, int n_max, int stride, int order);
/// Oracle for the closed formula: exact finite-n ratios extrapolated.
Extrapolation extrapolate_average(const DependenceGraph& g, Average which, int N);

}  // namespace tracepar
