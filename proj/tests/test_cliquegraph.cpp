#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tracepar/cliquegraph.hpp"
#include "tracepar/errors.hpp"

using namespace tracepar;

namespace {

int node_of(const CliqueGraph& cg, Mask m) {
  auto it = std::find(cg.nodes.begin(), cg.nodes.end(), m);
  REQUIRE(it != cg.nodes.end());
  return static_cast<int>(it - cg.nodes.begin());
}

using Matrix = std::vector<std::vector<long>>;

}  // namespace

TEST_CASE("graph of cliques") {
  CliqueGraph cg = build_clique_graph(t4());
  CHECK(cg.size() == 9);
  // the complement has exactly the arcs from a pair to the singletons and
  // pairs it fails to dominate
  int missing = 0;
  for (int i = 0; i < cg.size(); ++i)
    for (int j = 0; j < cg.size(); ++j) missing += !cg.arc(i, j);
  CHECK(missing == 81 - 6 * 5 - 6 * 2 - 3 * 6 - 3 * 3);

  CliqueGraph one = build_clique_graph(free_monoid(1));
  CHECK(one.size() == 1);
  CHECK(one.arc(0, 0));

  CliqueGraph fc = build_clique_graph(free_commutative(2));
  const int a = node_of(fc, 1);
  const int b = node_of(fc, 2);
  const int ab = node_of(fc, 3);
  CHECK(fc.succ[static_cast<std::size_t>(a)] == std::vector<int>{a});
  CHECK(fc.succ[static_cast<std::size_t>(b)] == std::vector<int>{b});
  CHECK(fc.succ[static_cast<std::size_t>(ab)].size() == 3);
}

TEST_CASE("self-loops and the singleton subgraph") {
  for (const auto& g : testing::small_graphs(4)) {
    CliqueGraph cg = build_clique_graph(g);
    for (int i = 0; i < cg.size(); ++i) {
      CHECK(cg.arc(i, i));
      CHECK_FALSE(cg.succ[static_cast<std::size_t>(i)].empty());
    }
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        CHECK(cg.arc(node_of(cg, Mask{1} << x), node_of(cg, Mask{1} << y)) == g.depends(x, y));
  }
}

TEST_CASE("condensation") {
  Condensation t = condensation(build_clique_graph(t4()));
  CHECK(t.components.size() == 1);
  CHECK(t.final[0]);

  CliqueGraph fcg = build_clique_graph(free_commutative(2));
  Condensation fc = condensation(fcg);
  CHECK(fc.components.size() == 3);
  int finals = 0;
  for (std::size_t c = 0; c < fc.components.size(); ++c)
    if (fc.final[c]) {
      ++finals;
      CHECK(fc.components[c].size() == 1);
      CHECK(fcg.length(fc.components[c][0]) == 1);
    }
  CHECK(finals == 2);

  Condensation one = condensation(build_clique_graph(free_monoid(1)));
  CHECK(one.components.size() == 1);
  CHECK(one.final[0]);
}

TEST_CASE("connected graphs give strongly connected graphs of cliques") {
  for (const auto& g : testing::small_graphs(4)) {
    if (!is_connected(g)) continue;
    CHECK(condensation(build_clique_graph(g)).components.size() == 1);
  }
}

TEST_CASE("final components are the cliques of the graph components") {
  for (const auto& g : testing::small_graphs(4)) {
    CliqueGraph cg = build_clique_graph(g);
    Condensation c = condensation(cg);
    std::vector<std::vector<Mask>> finals;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      if (!c.final[i]) continue;
      std::vector<Mask> nodes;
      for (int v : c.components[i]) nodes.push_back(cg.nodes[static_cast<std::size_t>(v)]);
      std::sort(nodes.begin(), nodes.end());
      finals.push_back(nodes);
    }
    std::vector<std::vector<Mask>> expected;
    for (Mask comp : connected_components(g)) {
      std::vector<Mask> nodes;
      for (Mask q : cg.nodes)
        if ((q & comp) == q) nodes.push_back(q);
      std::sort(nodes.begin(), nodes.end());
      expected.push_back(nodes);
    }
    std::sort(finals.begin(), finals.end());
    std::sort(expected.begin(), expected.end());
    CHECK(finals == expected);
  }
}

TEST_CASE("coarsest equitable partitions") {
  CHECK(coarsest_equitable_partition(build_clique_graph(t4())).coloration == Matrix{{5, 2}, {6, 3}});
  for (int k = 1; k <= 5; ++k)
    CHECK(coarsest_equitable_partition(build_clique_graph(free_monoid(k))).coloration == Matrix{{k}});
  for (long n = 2; n <= 6; ++n) {
    EquitablePartition p = coarsest_equitable_partition(build_clique_graph(cocktail_party(static_cast<int>(n))));
    CHECK(p.coloration == Matrix{{2 * n - 1, n - 1}, {2 * n, n}});
    CHECK(p.cell_length == std::vector<int>{1, 2});
  }
}

TEST_CASE("refinement is a fixed point on its own output") {
  for (const auto& g : testing::small_graphs(4)) {
    CliqueGraph cg = build_clique_graph(g);
    EquitablePartition p = coarsest_equitable_partition(cg);
    CHECK(refine_partition(cg, p.cells).cells == p.cells);
    auto check = is_equitable(cg, p.cells);
    REQUIRE(check);
    CHECK(check->coloration == p.coloration);
    for (std::size_t i = 0; i < p.cells.size(); ++i)
      for (int v : p.cells[i]) CHECK(cg.length(v) == p.cell_length[i]);
  }
}

TEST_CASE("equitability checks") {
  DependenceGraph g = t4();
  CliqueGraph cg = build_clique_graph(g);
  auto id = [&](const char* n) { return node_of(cg, Mask{1} << *g.index_of(n)); };
  std::vector<int> pairs;
  for (int i = 0; i < cg.size(); ++i)
    if (cg.length(i) == 2) pairs.push_back(i);
  auto three = is_equitable(cg, {{id("a12"), id("a13"), id("a14")}, {id("a23"), id("a24"), id("a34")}, pairs});
  REQUIRE(three);
  CHECK(three->coloration == Matrix{{3, 2, 2}, {2, 3, 2}, {3, 3, 3}});

  EquitablePartition d = discrete_partition(cg);
  for (int i = 0; i < cg.size(); ++i)
    for (int j = 0; j < cg.size(); ++j)
      CHECK(d.coloration[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == (cg.arc(i, j) ? 1 : 0));

  std::vector<int> rest;
  for (int i = 0; i < cg.size(); ++i)
    if (i != id("a12")) rest.push_back(i);
  CHECK_FALSE(is_equitable(cg, {{id("a12")}, rest}));
  CHECK_THROWS_AS(is_equitable(cg, {{0, 1}, {1, 2}}), ShapeError);
}
