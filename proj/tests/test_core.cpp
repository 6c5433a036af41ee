#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tracepar/core.hpp"
#include "tracepar/errors.hpp"

using namespace tracepar;

namespace {

std::vector<std::string> names(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("build_graph closes and complements the relation") {
  DependenceGraph one = DependenceGraph::build(names({"a"}), {}, RelationKind::independence);
  CHECK(one.size() == 1);
  CHECK(one.depends(0, 0));
  CHECK(one.independence_pairs().empty());

  DependenceGraph g = t4();
  CHECK(g.size() == 6);
  CHECK(2 * g.independence_pairs().size() == 6);
  const int a12 = *g.index_of("a12");
  const int a34 = *g.index_of("a34");
  CHECK_FALSE(g.depends(a12, a34));
  CHECK_FALSE(g.depends(a34, a12));

  DependenceGraph fc = DependenceGraph::build(names({"a", "b"}), {}, RelationKind::dependence);
  CHECK(is_free_commutative(fc));
  for (int a = 0; a < fc.size(); ++a) CHECK(fc.depends(a, a));
}

TEST_CASE("build_graph rejects malformed input") {
  CHECK_THROWS_AS(DependenceGraph::build(names({"a", "a"}), {}, RelationKind::dependence), GraphError);
  CHECK_THROWS_AS(DependenceGraph::build(names({"a"}), {{"a", "z"}}, RelationKind::dependence), GraphError);
  CHECK_THROWS_AS(DependenceGraph::build(names({"a", "b"}), {{"a", "a"}}, RelationKind::independence), GraphError);
  CHECK_THROWS_AS(DependenceGraph::build(names({"a b"}), {}, RelationKind::dependence), GraphError);
  CHECK_THROWS_AS(DependenceGraph::build({}, {}, RelationKind::dependence), GraphError);
}

TEST_CASE("dependence stays reflexive and symmetric") {
  for (const auto& g : testing::small_graphs(5)) {
    for (int a = 0; a < g.size(); ++a) {
      CHECK(g.depends(a, a));
      for (int b = 0; b < g.size(); ++b) {
        CHECK(g.depends(a, b) == g.depends(b, a));
        CHECK(((g.indep(a) >> b) & 1U) == !g.depends(a, b));
      }
    }
  }
}

TEST_CASE("clique enumeration") {
  DependenceGraph g = t4();
  auto cl = enumerate_cliques(g);
  REQUIRE(cl.size() == 9);
  for (int i = 0; i < 6; ++i) CHECK(popcount(cl[static_cast<std::size_t>(i)]) == 1);
  std::vector<std::string> pairs;
  for (int i = 6; i < 9; ++i) pairs.push_back(clique_name(g, cl[static_cast<std::size_t>(i)]));
  CHECK(pairs == std::vector<std::string>{"a12.a34", "a13.a24", "a14.a23"});

  CHECK(enumerate_cliques(free_monoid(5)).size() == 5);
  CHECK(enumerate_cliques(free_commutative(3)).size() == 7);
  CHECK_THROWS_AS(enumerate_cliques(free_commutative(21)), ResourceError);

  for (const auto& h : testing::small_graphs(4)) {
    auto c = enumerate_cliques(h);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) CHECK(clique_less(c[i], c[i + 1]));
    for (Mask m : c)
      for (int a : members(m)) CHECK((h.dep(a) & m) == (Mask{1} << a));
  }
}

TEST_CASE("CF admissibility") {
  DependenceGraph g = t4();
  auto id = [&](const char* n) { return Mask{1} << *g.index_of(n); };
  CHECK(is_cf_admissible(id("a12") | id("a34"), id("a14") | id("a23"), g));
  DependenceGraph fc = free_commutative(2);
  CHECK_FALSE(is_cf_admissible(1, 2, fc));
  for (const auto& h : testing::small_graphs(4))
    for (Mask c : enumerate_cliques(h)) CHECK(is_cf_admissible(c, c, h));
}

TEST_CASE("projection to the Cartier-Foata normal form") {
  DependenceGraph g = t4();
  Trace t = project_word(g, std::vector<std::string>{"a12", "a34", "a23", "a23", "a14"});
  REQUIRE(t.height() == 3);
  CHECK(t.length() == 5);
  CHECK(clique_name(g, t.factors[0]) == "a12.a34");
  CHECK(clique_name(g, t.factors[1]) == "a14.a23");
  CHECK(clique_name(g, t.factors[2]) == "a23");

  Trace e = project_word(g, std::vector<int>{});
  CHECK(e.height() == 0);
  CHECK(e.length() == 0);

  DependenceGraph fc = free_commutative(2);
  Trace ab = project_word(fc, std::vector<int>{0, 1});
  Trace ba = project_word(fc, std::vector<int>{1, 0});
  CHECK(ab == ba);
  CHECK(ab.height() == 1);
  CHECK_THROWS_AS(project_word(g, std::vector<std::string>{"a99"}), GraphError);
}

TEST_CASE("heap heights") {
  DependenceGraph g = t4();
  HeapState s(g.size());
  s = heap_push(s, *g.index_of("a12"), g);
  s = heap_push(s, *g.index_of("a34"), g);
  CHECK(s.max == 1);
  for (const char* a : {"a23", "a23", "a14"}) s = heap_push(s, *g.index_of(a), g);
  CHECK(s.max == 3);

  HeapState r(1);
  DependenceGraph one = free_monoid(1);
  for (int i = 0; i < 7; ++i) heap_push_inplace(r, 0, one);
  CHECK(r.max == 7);
  CHECK_THROWS_AS(heap_push(r, 3, one), GraphError);
}

TEST_CASE("random words: normal form invariants") {
  std::mt19937_64 rng(7);
  std::vector<DependenceGraph> graphs = testing::small_graphs(4);
  graphs.push_back(t4());
  graphs.push_back(cocktail_party(4));
  for (const auto& g : graphs) {
    const int c = max_clique_size(g);
    for (int trial = 0; trial < 10000; ++trial) {
      std::uniform_int_distribution<int> len(0, 12);
      std::vector<int> w = testing::random_word(rng, g.size(), len(rng));
      Trace t = project_word(g, w);
      HeapState s(g.size());
      for (int a : w) heap_push_inplace(s, a, g);
      REQUIRE(s.max == t.height());
      REQUIRE(t.length() == static_cast<int>(w.size()));
      REQUIRE(t.height() <= t.length());
      REQUIRE(t.length() <= c * t.height());
      for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) REQUIRE(is_cf_admissible(t.factors[i], t.factors[i + 1], g));
      // one transposition of adjacent independent letters
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (g.depends(w[i], w[i + 1])) continue;
        std::vector<int> v = w;
        std::swap(v[i], v[i + 1]);
        REQUIRE(project_word(g, v) == t);
        break;
      }
    }
  }
}

TEST_CASE("graph catalog and isomorphism") {
  std::vector<std::size_t> counts;
  for (int k = 1; k <= 5; ++k) counts.push_back(all_graphs(k).size());
  CHECK(counts == std::vector<std::size_t>{1, 2, 4, 11, 34});
  CHECK(isomorphic(cocktail_party(3), t4()));
  CHECK_FALSE(isomorphic(cocktail_party(2), star_graph(4)));
  CHECK(is_free(free_monoid(3)));
  CHECK(connected_components(direct_product(3, 2)).size() == 3);
  CHECK(star_graph(4).dep(0) == 0xF);
  auto gs = all_graphs(4);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) CHECK(isomorphic(gs[i], gs[j]) == (i == j));
}

TEST_CASE("components, induced graphs and unions") {
  DependenceGraph u = disjoint_union(t4(), free_monoid(1));
  CHECK(u.size() == 7);
  auto comps = connected_components(u);
  REQUIRE(comps.size() == 2);
  CHECK(isomorphic(induced(u, comps[0]), t4()));
  CHECK(is_connected(t4()));
  CHECK_FALSE(is_connected(u));
  CHECK(max_clique_size(free_commutative(4)) == 4);
  CHECK(max_clique_size(t4()) == 2);
}
