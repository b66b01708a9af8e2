#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "cubforge/cubical.hpp"
#include "cubforge/graph.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("cubical");

namespace {

Graph segment() {
  Graph g(2);
  g.add_edge(0, 1);
  return g;
}

Graph doubled_edge() {
  Graph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);  // a circle made of two parallel edges
  return g;
}

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("full product cell counts") {
  SUBCASE("cube") {
    auto x = ProductComplex::full_product(segment(), segment(), segment());
    CHECK(x.count_cells(0) == 8);
    CHECK(x.count_cells(1) == 12);
    CHECK(x.count_cells(2) == 6);
    CHECK(x.count_cells(3) == 1);
    CHECK(x.euler_direct() == 1);
    CHECK(x.faces_closed());
  }
  SUBCASE("path times squares") {
    auto x = ProductComplex::full_product(path3(), segment(), segment());
    CHECK(x.count_cells(0) == 12);
    CHECK(x.count_cells(1) == 20);
    CHECK(x.count_cells(2) == 11);
    CHECK(x.count_cells(3) == 2);
    CHECK(x.euler_direct() == 1);
  }
  SUBCASE("parallel edges make distinct cubes") {
    auto x = ProductComplex::full_product(doubled_edge(), segment(), segment());
    CHECK(x.count_cells(1) == 16);
    CHECK(x.count_cells(2) == 10);
    CHECK(x.count_cells(3) == 2);
    // circle cross square is a solid torus shell, chi 0
    CHECK(x.euler_direct() == 0);
  }
}

TEST_CASE("counts do not depend on the worker count") {
  auto x = ProductComplex::full_product(path3(), path3(), segment());
  for (int d = 0; d <= 3; ++d) CHECK(x.count_cells(d, 1) == x.count_cells(d, 5));
  CHECK(x.euler_direct(1) == x.euler_direct(6));
  CHECK(x.cells(2).size() == static_cast<std::size_t>(x.count_cells(2)));
}

TEST_CASE("cube minus a corner") {
  std::vector<std::array<int, 3>> verts;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (a + b + c > 0) verts.push_back({a, b, c});
  ProductComplex x(segment(), segment(), segment(), verts);

  CHECK(!x.has_vertex(0, 0, 0));
  CHECK(x.has_vertex(1, 1, 1));
  CHECK(x.count_cells(0) == 7);
  CHECK(x.count_cells(1) == 9);
  CHECK(x.count_cells(2) == 3);
  CHECK(x.count_cells(3) == 0);
  CHECK(x.euler_direct() == 1);
  CHECK(x.faces_closed());

  SUBCASE("has_cell follows corner membership") {
    CellTriple edge_on{{Cell{true, 0}, Cell{false, 1}, Cell{false, 1}}};
    CHECK(x.has_cell(edge_on));
    CellTriple edge_off{{Cell{true, 0}, Cell{false, 0}, Cell{false, 0}}};
    CHECK(!x.has_cell(edge_off));  // one endpoint is the deleted corner
    CellTriple cube{{Cell{true, 0}, Cell{true, 0}, Cell{true, 0}}};
    CHECK(!x.has_cell(cube));
  }

  SUBCASE("the link opposite the hole is a hollow triangle") {
    auto l = x.vertex_link({1, 1, 1});
    CHECK(l.count(0) == 3);
    CHECK(l.count(1) == 3);
    CHECK(l.count(2) == 0);
    l.validate();
    CHECK(link_connected(l));
    auto f = is_flag(l);
    CHECK(!f.flag);
    CHECK(f.counterexample == std::array<int, 3>{0, 1, 2});
  }

  SUBCASE("links next to the hole lose a vertex") {
    auto l = x.vertex_link({1, 0, 0});
    CHECK(l.count(0) == 2);
    CHECK(l.count(1) == 1);
    CHECK(is_flag(l).flag);
  }
}

TEST_CASE("link counts double count cells") {
  auto x = ProductComplex::full_product(segment(), segment(), segment());
  long long lv = 0, le = 0, lt = 0;
  for (const auto& v : x.vertices()) {
    auto l = x.vertex_link(v);
    l.validate();
    lv += l.count(0);
    le += l.count(1);
    lt += l.count(2);
    CHECK(is_flag(l).flag);
    CHECK(link_connected(l));
  }
  CHECK(lv == 2 * x.count_cells(1));
  CHECK(le == 4 * x.count_cells(2));
  CHECK(lt == 8 * x.count_cells(3));
}

TEST_CASE("link complex operations") {
  LinkComplex tri;
  tri.verts = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}};
  tri.edges = {{0, 1}, {0, 2}, {1, 2}};
  tri.triangles = {{0, 1, 2}};
  tri.validate();
  CHECK(link_connected(tri));
  CHECK(is_flag(tri).flag);

  SUBCASE("restriction keeps induced faces") {
    auto r = tri.restrict_to({1, 1, 0});
    CHECK(r.count(0) == 2);
    CHECK(r.count(1) == 1);
    CHECK(r.count(2) == 0);
    r.validate();
  }
  SUBCASE("missing faces are rejected") {
    LinkComplex bad = tri;
    bad.edges = {{0, 1}, {0, 2}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }
  SUBCASE("empty complexes are not connected") {
    LinkComplex e;
    CHECK(!link_connected(e));
  }
}

TEST_CASE("cell triples round trip through json") {
  CellTriple t{{Cell{true, 3}, Cell{false, 7}, Cell{true, 0}}};
  CHECK(t.dim() == 2);
  auto j = t.to_json();
  CHECK(j[0][0] == "e");
  CHECK(j[1][0] == "v");
  CHECK(j[1][1] == 7);
  CHECK(CellTriple::from_json(j) == t);
}

TEST_CASE("edge links") {
  auto x = ProductComplex::full_product(segment(), segment(), segment());
  CellTriple e{{Cell{true, 0}, Cell{false, 0}, Cell{false, 0}}};
  auto el = x.edge_link(e);
  // two squares at the edge, joined by the one 3-cube
  CHECK(el.graph.vertex_count() == 2);
  CHECK(el.graph.edge_count() == 1);
  CHECK(el.squares.size() == 2);
  CHECK(el.graph.is_crossing());
}

TEST_SUITE_END();
