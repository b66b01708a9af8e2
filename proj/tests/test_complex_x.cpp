#include <doctest.h>

#include <map>
#include <stdexcept>

#include "cubforge/arithmetic.hpp"
#include "cubforge/complex_x.hpp"
#include "cubforge/search.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("complex-x");

namespace {

const Graph& minimal24_graph() {
  static Graph g = [] {
    auto m = find_minimal_24();
    if (!m.found) throw std::runtime_error("deletion search came up empty");
    return m.graph;
  }();
  return g;
}

const XSpec& spec9() {
  static XSpec s = [] {
    Graph g = arithmetic_graph(arithmetic_example_9());
    return XSpec::from_tagged(g, g, g);
  }();
  return s;
}

// one 24-vertex and two different factor shapes: exercises the unequal case
const XSpec& spec_mixed() {
  static XSpec s = XSpec::from_tagged(minimal24_graph(), arithmetic_graph(arithmetic_example_9()),
                                      minimal24_graph());
  return s;
}

const ProductComplex& x_mixed() {
  static ProductComplex x = build_x(spec_mixed());
  return x;
}

}  // namespace

TEST_CASE("spec construction") {
  SUBCASE("rejects non-sizeable input") {
    Graph k22;
    for (int i = 0; i < 2; ++i) k22.add_vertex({Side::A, i, ""});
    for (int i = 0; i < 2; ++i) k22.add_vertex({Side::B, i, ""});
    for (int u = 0; u < 2; ++u)
      for (int v = 2; v < 4; ++v) k22.add_edge(u, v);
    CHECK_THROWS_AS(XSpec::from_tagged(k22, k22, k22), std::invalid_argument);
  }
  SUBCASE("factors are complete bipartite on the paired sides") {
    const auto& s = spec9();
    CHECK(s.sizes_a() == std::array<long long, 3>{18, 18, 18});
    CHECK(s.sizes_b() == std::array<long long, 3>{18, 18, 18});
    CHECK(s.sizes_e() == std::array<long long, 3>{72, 72, 72});
    for (int f = 0; f < 3; ++f) {
      const Graph& k = s.factor(f);
      CHECK(k.vertex_count() == 36);
      CHECK(k.edge_count() == 18 * 18);
      CHECK(k.is_crossing());
      CHECK(k.all_sides_tagged());
    }
  }
  SUBCASE("factor vertex translation round trips") {
    const auto& s = spec_mixed();
    for (int f = 0; f < 3; ++f) {
      const Graph& k = s.factor(f);
      for (int fv = 0; fv < k.vertex_count(); ++fv) {
        int gi = s.gamma_index_of(f, fv);
        int gv = s.gamma_vertex_of(f, fv);
        if (s.factor_vertex_is_a(f, fv)) {
          CHECK(gi == kFactorAGamma[f]);
          CHECK(s.factor_vertex_from_a(f, gv) == fv);
          CHECK(s.gamma(gi).side(gv) == Side::A);
        } else {
          CHECK(gi == kFactorBGamma[f]);
          CHECK(s.factor_vertex_from_b(f, gv) == fv);
          CHECK(s.gamma(gi).side(gv) == Side::B);
        }
      }
    }
    // A-side translation rejects B-side vertices
    int b_vertex = s.gamma(1).vertices_with(Side::B).front();
    CHECK_THROWS_AS(s.factor_vertex_from_a(0, b_vertex), std::invalid_argument);
  }
}

TEST_CASE("vertex census by class") {
  const auto& x = x_mixed();
  CHECK(x.count_cells(0) == 9612);
  std::map<VertexType, long long> counts;
  for (const auto& v : x.vertices()) ++counts[classify_vertex(spec_mixed(), v)];
  CHECK(counts[VertexType::type1_a] == 12 * 18 * 12);
  CHECK(counts[VertexType::type1_b] == 12 * 18 * 12);
  CHECK(counts[VertexType::type2_g1] == 45 * (12 + 18));
  CHECK(counts[VertexType::type2_g2] == 72 * (12 + 12));
  CHECK(counts[VertexType::type2_g3] == 45 * (18 + 12));

  // triples outside X are rejected even when coordinates are in range
  bool threw = false;
  for (const auto& v : x.vertices()) {
    std::array<int, 3> off = v;
    off[0] = (off[0] + 1) % spec_mixed().factor(0).vertex_count();
    if (!x.has_vertex(off)) {
      CHECK_THROWS_AS(classify_vertex(spec_mixed(), off), std::invalid_argument);
      threw = true;
      break;
    }
  }
  CHECK(threw);
}

TEST_CASE("euler characteristic formula") {
  SUBCASE("agrees with direct counts on the mixed instance") {
    const auto& s = spec_mixed();
    CHECK(euler_formula_x(s.sizes_a(), s.sizes_b(), s.sizes_e()) == x_mixed().euler_direct());
  }
  SUBCASE("known values") {
    CHECK(euler_formula_x({12, 12, 12}, {12, 12, 12}, {45, 45, 45}) == -3024);
    CHECK(euler_formula_x({18, 18, 18}, {18, 18, 18}, {72, 72, 72}) == -19440);
    // the equal-size family at 20/20/80, recorded as computed from the
    // printed polynomial
    CHECK(euler_formula_x({20, 20, 20}, {20, 20, 20}, {80, 80, 80}) == -25600);
  }
  SUBCASE("invariant under rotating the three defining graphs") {
    std::array<long long, 3> a{3, 5, 7}, b{4, 6, 8}, e{9, 11, 13};
    auto rot = [](std::array<long long, 3> x) {
      return std::array<long long, 3>{x[2], x[0], x[1]};
    };
    CHECK(euler_formula_x(rot(a), rot(b), rot(e)) == euler_formula_x(a, b, e));
  }
}

TEST_CASE("link table and edge classification on the mixed instance") {
  const auto& s = spec_mixed();
  const auto& x = x_mixed();

  auto lt = verify_link_table(s, x, 4);
  CHECK(lt.ok);
  CHECK(lt.rows.size() == 8);
  long long verts = 0, link_verts = 0;
  for (const auto& row : lt.rows) {
    verts += row.vertex_count;
    link_verts += row.cells0;
  }
  CHECK(verts == x.count_cells(0));
  CHECK(link_verts == 2 * x.count_cells(1));

  auto ge = gamma_edge_certificate(s, x, 4);
  CHECK(ge.ok);
  CHECK(ge.min_gamma_girth >= 6);
  CHECK(ge.gamma_edges + ge.bipartite_edges == x.count_cells(1));
  CHECK(ge.per_gamma[0] + ge.per_gamma[1] + ge.per_gamma[2] == ge.gamma_edges);
  for (int i = 0; i < 3; ++i) CHECK(ge.per_gamma[i] > 0);
}

TEST_SUITE_END();
