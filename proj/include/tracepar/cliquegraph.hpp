#pragma once

#include <optional>
#include <vector>

#include "tracepar/core.hpp"

namespace tracepar {

/// Graph of cliques: arcs are the CF-admissible pairs.
struct CliqueGraph {
  std::vector<Mask> nodes;
  std::vector<std::vector<int>> succ;

  int size() const { return static_cast<int>(nodes.size()); }
  bool arc(int i, int j) const;
  int length(int i) const { return popcount(nodes[static_cast<std::size_t>(i)]); }
};

CliqueGraph build_clique_graph(const DependenceGraph& g, std::size_t cap = kDefaultCliqueCap);

/// Strongly connected components. `dag[c]` lists successor components and
/// final components have none.
struct Condensation {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
  std::vector<std::vector<int>> dag;
  std::vector<bool> final;
};

Condensation condensation(const CliqueGraph& cg);

struct EquitablePartition {
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_length;
  std::vector<int> cell_of;
  /// coloration[i][j]: successors in cell j of any node of cell i.
  std::vector<std::vector<long>> coloration;

  int size() const { return static_cast<int>(cells.size()); }
};

/// Color refinement from the partition by clique size.
EquitablePartition coarsest_equitable_partition(const CliqueGraph& cg);
/// Color refinement from the given cells.
EquitablePartition refine_partition(const CliqueGraph& cg, const std::vector<std::vector<int>>& cells);
/// One cell per clique; the coloration matrix is the adjacency matrix.
EquitablePartition discrete_partition(const CliqueGraph& cg);
/// The coloration matrix when `cells` is equitable. Throws ShapeError when
/// `cells` is not a partition of the nodes.
std::optional<EquitablePartition> is_equitable(const CliqueGraph& cg, const std::vector<std::vector<int>>& cells);

}  // namespace tracepar
