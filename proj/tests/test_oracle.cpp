#include <doctest.h>

#include "support.hpp"
#include "tracepar/errors.hpp"
#include "tracepar/oracle.hpp"

using namespace tracepar;

TEST_CASE("census examples") {
  TraceCensus t = enumerate_traces(t4(), 8);
  CHECK(t.at(3, 5) == 126);
  CHECK(t.at(6, 8) == 71910);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.per_length()[1] == 6);
  CHECK(t.per_length()[2] == 33);

  TraceCensus f = enumerate_traces(free_monoid(2), 6);
  for (int n = 0; n <= 6; ++n) CHECK(f.at(n, n) == ipow(Integer(2), static_cast<unsigned>(n)));

  // commuting letters: one trace per multiset of letters
  TraceCensus c = enumerate_traces(free_commutative(2), 6);
  for (int n = 0; n <= 6; ++n) CHECK(c.per_length()[static_cast<std::size_t>(n)] == n + 1);
  CHECK(c.at(2, 3) == 2);
}

TEST_CASE("normal-form growth matches projected words") {
  for (const auto& g : testing::small_graphs(4)) {
    const int n = g.size() <= 3 ? 7 : 6;
    CHECK(enumerate_traces(g, n) == census_by_words(g, n));
  }
  CHECK(enumerate_traces(t4(), 5) == census_by_words(t4(), 5));
}

TEST_CASE("census bounds") {
  for (const auto& g : testing::small_graphs(3)) {
    TraceCensus t = enumerate_traces(g, 6);
    const int c = max_clique_size(g);
    std::vector<Integer> heights = t.per_height();
    for (int k = 0; k <= 6; ++k)
      for (int l = 0; l <= 6; ++l)
        if (l < k || l > c * k) CHECK(t.at(k, l) == 0);
    for (int l = 0; l <= 6; ++l) CHECK(t.per_length()[static_cast<std::size_t>(l)] <= ipow(Integer(g.size()), static_cast<unsigned>(l)));
    CHECK(heights[0] == 1);
  }
  CHECK_THROWS_AS(enumerate_traces(t4(), -1), ShapeError);
  CHECK_THROWS_AS(census_by_words(t4(), 12), ResourceError);
  CHECK_THROWS_AS(enumerate_traces(free_monoid(8), 12, 1e4), ResourceError);
}
