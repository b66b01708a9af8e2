#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "cubforge/arithmetic.hpp"
#include "cubforge/sizeable.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("arithmetic");

TEST_CASE("graph layout and regularity") {
  auto params = arithmetic_example_9();
  Graph g = arithmetic_graph(params);
  CHECK(g.vertex_count() == 36);
  CHECK(g.edge_count() == 72);
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
  CHECK(g.is_simple());
  CHECK(g.is_crossing());

  // blocks laid out A0 A1 B0 B1 in contiguous runs of n
  auto p = arithmetic_partition(params);
  CHECK(p.parts() == SizeablePartition::from_tags(g).parts());
  for (int i = 0; i < 9; ++i) {
    CHECK(g.label(i).side == Side::A);
    CHECK(p.part(i) == 0);
    CHECK(g.label(9 + i).side == Side::A);
    CHECK(p.part(9 + i) == 1);
    CHECK(g.label(18 + i).side == Side::B);
    CHECK(p.part(18 + i) == 0);
    CHECK(g.label(27 + i).side == Side::B);
    CHECK(p.part(27 + i) == 1);
  }
}

TEST_CASE("published instance is sizeable with girth at least six") {
  auto params = arithmetic_example_9();
  Graph g = arithmetic_graph(params);
  CHECK(verify_sizeable(g, arithmetic_partition(params)).verdict);
  auto girth = g.girth();
  REQUIRE(girth.has_value());
  CHECK(*girth >= 6);
}

TEST_CASE("equal offsets are rejected") {
  ArithmeticParams p;
  p.n = 5;
  p.h = {{{0, 0}, {0, 1}}};
  p.k = {{{0, 2}, {3, 4}}};  // k[0][0] == h[0][0]
  CHECK_THROWS_AS(arithmetic_graph(p), std::invalid_argument);
  p.k[0][0] = 1;
  p.h[1][1] = 9;  // 9 == 4 == k[1][1] mod 5
  CHECK_THROWS_AS(arithmetic_graph(p), std::invalid_argument);
}

TEST_CASE("parameter scan") {
  SUBCASE("empty below nine") {
    CHECK(search_arithmetic(8).empty());
  }
  SUBCASE("at nine the published tuple shows up, normalized") {
    auto hits = search_arithmetic(9);
    CHECK(hits.size() == 192);
    CHECK(std::find(hits.begin(), hits.end(), arithmetic_example_9()) != hits.end());
    for (const auto& t : hits) {
      CHECK(t.n == 9);
      CHECK(t.h[0][0] == 0);
      CHECK(t.h[0][1] == 0);
      CHECK(t.h[1][0] == 0);
      CHECK(t.k[0][0] != 0);
      CHECK(t.k[0][1] != 0);
      CHECK(t.k[1][0] != 0);
      CHECK(t.h[1][1] != t.k[1][1]);
      Graph g = arithmetic_graph(t);
      CHECK(verify_sizeable(g, arithmetic_partition(t)).verdict);
    }
  }
}

TEST_SUITE_END();
