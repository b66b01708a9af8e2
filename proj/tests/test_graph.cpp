#include <doctest.h>

#include <algorithm>

#include "cubforge/digest.hpp"
#include "cubforge/graph.hpp"
#include "cubforge/graph_io.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("graph");

namespace {

Graph k22_tagged() {
  Graph g;
  g.add_vertex({Side::A, 0, "a0"});
  g.add_vertex({Side::A, 1, "a1"});
  g.add_vertex({Side::B, 0, "b0"});
  g.add_vertex({Side::B, 1, "b1"});
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

}  // namespace

TEST_CASE("construction and incidence") {
  Graph g(3);
  int e0 = g.add_edge(0, 1);
  int e1 = g.add_edge(1, 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.other_endpoint(e0, 0) == 1);
  CHECK(g.other_endpoint(e1, 2) == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)g.edge(5), std::invalid_argument);

  auto nb = g.neighbors(1);
  std::sort(nb.begin(), nb.end());
  CHECK(nb == std::vector<int>{0, 2});
}

TEST_CASE("parallel edges and simplicity") {
  Graph g(2);
  g.add_edge(0, 1);
  CHECK(g.is_simple());
  g.add_edge(0, 1);
  auto pp = g.parallel_pair();
  REQUIRE(pp.has_value());
  CHECK(pp->first != pp->second);
  CHECK(!g.is_simple());
  // a parallel pair is a 2-cycle
  CHECK(g.girth() == 2);
}

TEST_CASE("four cycles and girth") {
  SUBCASE("complete bipartite 2x2") {
    Graph g = k22_tagged();
    auto w = g.find_four_cycle();
    REQUIRE(w.has_value());
    CHECK(w->length() == 4);
    CHECK(w->vertices == std::vector<int>{0, 2, 1, 3});
    CHECK(g.girth() == 4);
  }
  SUBCASE("path is acyclic") {
    Graph g = path(5);
    CHECK(!g.find_four_cycle().has_value());
    CHECK(!g.girth().has_value());
  }
  SUBCASE("six cycle") {
    Graph g = cycle(6);
    CHECK(!g.find_four_cycle().has_value());
    CHECK(g.girth() == 6);
  }
}

TEST_CASE("tags and crossing") {
  Graph g = k22_tagged();
  CHECK(g.all_sides_tagged());
  CHECK(g.is_crossing());
  CHECK(g.vertices_with(Side::A) == std::vector<int>{0, 1});
  CHECK(g.vertices_with(Side::B, 1) == std::vector<int>{3});
  g.add_vertex({});
  CHECK(!g.all_sides_tagged());

  Graph h(2);
  h.label(0).side = Side::A;
  h.label(1).side = Side::A;
  h.add_edge(0, 1);
  CHECK(!h.is_crossing());
}

TEST_CASE("connectivity of induced subgraphs") {
  Graph g = path(5);
  CHECK(g.is_connected());
  CHECK(g.is_connected_subset({1, 2, 3}));
  CHECK(!g.is_connected_subset({0, 2}));
  CHECK(!g.is_connected_subset({}));
  CHECK(g.is_connected_subset({4}));
  auto comps = g.components_within({0, 1, 3, 4});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{3, 4});
}

TEST_CASE("json round trip keeps labels and edges") {
  Graph g = k22_tagged();
  auto j = graph_to_json(g);
  Graph back = graph_from_json(j);
  CHECK(back.vertex_count() == 4);
  CHECK(back.edge_count() == 4);
  CHECK(back.side(0) == Side::A);
  CHECK(back.part(3) == 1);
  CHECK(back.label(1).name == "a1");
  CHECK(graph_to_json(back) == j);
}

TEST_CASE("edge list parsing") {
  Graph g = graph_from_edge_list("# comment\n0 2\n1 2\n\n3 0\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(2) == 2);
  CHECK_THROWS_AS(graph_from_edge_list("0 zero"), std::invalid_argument);
}

TEST_CASE("dot export mentions every vertex") {
  Graph g = k22_tagged();
  std::string dot = graph_to_dot(g);
  CHECK(dot.find("graph G") != std::string::npos);
  CHECK(dot.find("a0") != std::string::npos);
  CHECK(dot.find("b1") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 6);
}

TEST_CASE("digests are stable") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
  CHECK(fnv1a64(std::string("graph")) == fnv1a64(std::string("graph")));
}

TEST_SUITE_END();
