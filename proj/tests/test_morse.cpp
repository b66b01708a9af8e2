#include <doctest.h>

#include <stdexcept>

#include "cubforge/arithmetic.hpp"
#include "cubforge/branched.hpp"
#include "cubforge/complex_x.hpp"
#include "cubforge/homology.hpp"
#include "cubforge/morse.hpp"
#include "cubforge/search.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("morse");

namespace {

const XSpec& spec9() {
  static XSpec s = [] {
    Graph g = arithmetic_graph(arithmetic_example_9());
    return XSpec::from_tagged(g, g, g);
  }();
  return s;
}

const ProductComplex& x9() {
  static ProductComplex x = build_x(spec9());
  return x;
}

const XSpec& spec24() {
  static XSpec s = [] {
    auto m = find_minimal_24();
    if (!m.found) throw std::runtime_error("deletion search came up empty");
    return XSpec::from_tagged(m.graph, m.graph, m.graph);
  }();
  return s;
}

const ProductComplex& x24() {
  static ProductComplex x = build_x(spec24());
  return x;
}

}  // namespace

TEST_CASE("part rule orientation on the factors") {
  auto os = orient_k(spec9());
  for (int f = 0; f < 3; ++f) {
    const Graph& k = spec9().factor(f);
    const auto& o = os[f];
    for (int e = 0; e < k.edge_count(); ++e) {
      auto [u, v] = k.edge(e);
      int a_end = k.side(u) == Side::A ? u : v;
      int b_end = a_end == u ? v : u;
      // equal parts run A to B, unequal parts B to A
      if (k.part(a_end) == k.part(b_end))
        CHECK(o.tail(k, e) == a_end);
      else
        CHECK(o.tail(k, e) == b_end);
    }
    for (int v = 0; v < k.vertex_count(); ++v) {
      CHECK(o.out_degree(k, v) == 9);
      CHECK(o.in_degree(k, v) == 9);
    }
  }
  SUBCASE("part tags are required") {
    Graph k;
    k.add_vertex({Side::A, kNoPart, ""});
    k.add_vertex({Side::B, 0, ""});
    k.add_edge(0, 1);
    CHECK_THROWS_AS(orient_k_graph(k), std::invalid_argument);
  }
}

TEST_CASE("two-full orientations") {
  Graph cage = cage_graph(5);
  SUBCASE("meets the in/out bound") {
    auto o = orient_two_full(cage);
    CHECK(two_full_orientation_ok(cage, o));
    for (int v = 0; v < cage.vertex_count(); ++v) {
      CHECK(o.out_degree(cage, v) >= 2);
      CHECK(o.in_degree(cage, v) >= 2);
    }
  }
  SUBCASE("one-way traffic is rejected") {
    EdgeOrientation all_forward{std::vector<char>(cage.edge_count(), 1)};
    CHECK(!two_full_orientation_ok(cage, all_forward));
  }
  SUBCASE("low valence is rejected") {
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK_THROWS_AS(orient_two_full(c6), std::invalid_argument);
  }
}

TEST_CASE("ascending and descending links split each vertex link") {
  auto os = orient_k(spec9());
  const auto& x = x9();
  int sampled = 0;
  for (std::size_t i = 0; i < x.vertices().size(); i += 997) {
    const auto& v = x.vertices()[i];
    auto full = x.vertex_link(v);
    auto asc = ascending_link(x, os, v);
    auto desc = descending_link(x, os, v);
    asc.validate();
    desc.validate();
    CHECK(asc.count(0) + desc.count(0) == full.count(0));
    CHECK(asc.count(0) > 0);
    CHECK(desc.count(0) > 0);
    // the certificate's vanishing statement, on this sample
    auto ha = reduced_homology(asc);
    auto hd = reduced_homology(desc);
    CHECK(ha.rank[0] == 0);
    CHECK(ha.rank[1] == 0);
    CHECK(hd.rank[0] == 0);
    CHECK(hd.rank[1] == 0);
    ++sampled;
  }
  CHECK(sampled > 10);

  SUBCASE("vertices outside the complex are rejected") {
    std::array<int, 3> off = x.vertices().front();
    bool threw = false;
    for (const auto& v : x.vertices()) {
      off = v;
      off[0] = (off[0] + 1) % spec9().factor(0).vertex_count();
      if (!x.has_vertex(off)) {
        CHECK_THROWS_AS(ascending_link(x, os, off), std::invalid_argument);
        CHECK_THROWS_AS(descending_link(x, os, off), std::invalid_argument);
        threw = true;
        break;
      }
    }
    CHECK(threw);
  }
}

TEST_CASE("kernel certificate on the 24-vertex instance") {
  auto r = not_f3_certificate(spec24(), x24(), 4);
  CHECK(r.ok);
  CHECK(r.h01_all_zero);
  CHECK(r.dimension_le_2);
  CHECK(r.vertices_checked == 6696);
  CHECK(r.h2_witnesses == 2298);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == std::array<int, 3>{0, 0, 0});
  CHECK(r.witness_desc.rank[2] == 1);
  CHECK(!r.failure.has_value());
  // the 45-edge instance carries a cycle in one defining subgraph, so some
  // type 2 links are suspensions with nonzero top homology
  CHECK(!r.type2_all_trivial);
  CHECK(r.classes.size() == 8);
  long long total = 0;
  bool type2_nonzero = false;
  for (const auto& row : r.classes) {
    total += row.vertices;
    CHECK(row.vertices > 0);
    bool type2 = row.type != VertexType::type1_a && row.type != VertexType::type1_b;
    if (type2 && !row.all_trivial) type2_nonzero = true;
  }
  CHECK(total == 6696);
  CHECK(type2_nonzero);
  CHECK(!r.connectivity_note.empty());
}

TEST_SUITE_END();
