#pragma once

#include <vector>

#include "tracepar/bpoly.hpp"
#include "tracepar/cliquegraph.hpp"
#include "tracepar/core.hpp"
#include "tracepar/upoly.hpp"

namespace tracepar {

/// (u, A(x,y), v(x,y)) with A_ij = a_ij x y^{l_i} and v_i = x y^{l_i}.
struct LinearRepresentation {
  std::vector<Integer> u;
  std::vector<std::vector<long>> a;
  std::vector<int> length;
  bool reduced = false;

  int size() const { return static_cast<int>(u.size()); }
  BPoly entry(int i, int j) const;
  BPoly v(int i) const;
};

/// Full representation over every clique when `partition` is null.
LinearRepresentation linear_representation(const CliqueGraph& cg, const EquitablePartition* partition = nullptr);
/// Reduced by the coarsest equitable partition.
LinearRepresentation reduced_representation(const DependenceGraph& g);

/// F = P/Q with Q(0,0) = 1.
struct BivariateRational {
  BPoly num;
  BPoly den;
  /// True when P and Q were reduced by their exact gcd.
  bool cancelled = false;
};

/// Univariate fraction with den(0) = 1, in lowest terms.
struct URational {
  UPoly num;
  UPoly den;
};

/// Divide out the gcd and normalise den(0) to 1.
URational normalize(UPoly num, UPoly den);

enum class Specialization { L, H, G, Gtilde };

UPoly mobius_polynomial(const DependenceGraph& g);
BivariateRational solve_F(const LinearRepresentation& rep);
URational specialize(const BivariateRational& f, Specialization which);

/// Taylor coefficients of num/den up to degree n.
std::vector<Integer> series_coefficients(const URational& r, int n);
/// (L|n) for n <= N from the denominator recurrence.
std::vector<Integer> length_recurrence(const URational& L, int N);

struct CoefficientTable {
  int max_height = 0;
  int max_length = 0;
  /// f[k][l], 0 <= k <= max_height, 0 <= l <= max_length.
  std::vector<std::vector<Integer>> f;

  const Integer& at(int k, int l) const { return f[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]; }
  /// Sum over heights at each length.
  std::vector<Integer> length_totals() const;
  /// Sum over lengths at each height.
  std::vector<Integer> height_totals() const;
};

CoefficientTable coefficients(const LinearRepresentation& rep, int K, int N);

/// Boolean triple over the states (c, 1) .. (c, |c|).
struct ExpandedRepresentation {
  std::vector<std::pair<int, int>> states;
  std::vector<std::vector<int>> succ;
  std::vector<int> u;
  std::vector<int> v;

  int size() const { return static_cast<int>(states.size()); }
};

ExpandedRepresentation expand_representation(const CliqueGraph& cg);
/// det(I - A(1,y)).
UPoly det_I_minus_A1(const LinearRepresentation& rep);
/// det(I - y Atilde).
UPoly det_I_minus_yA(const ExpandedRepresentation& e);

}  // namespace tracepar
