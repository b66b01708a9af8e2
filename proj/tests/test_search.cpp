#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "cubforge/arithmetic.hpp"
#include "cubforge/projective.hpp"
#include "cubforge/search.hpp"
#include "cubforge/sizeable.hpp"
#include "cubforge/zarankiewicz.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("search");

namespace {

Graph tagged_cycle(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex({i % 2 == 0 ? Side::A : Side::B, kNoPart, ""});
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SearchOptions with_threads(int n) {
  SearchOptions o;
  o.threads = n;
  return o;
}

// the four subgraphs a sizeable partition induces, as vertex sets
std::vector<int> block_union(const Graph& g, const SizeablePartition& p, int s, int t) {
  std::vector<int> out = p.block(g, Side::A, s);
  auto b = p.block(g, Side::B, t);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

TEST_CASE("bipartition search on small graphs") {
  SUBCASE("six cycle has no sizeable partition") {
    // splitting one side needs a proper 2-coloring of the odd cycle the
    // other side's neighbor pairs trace out, so no mask survives
    auto r = search_bipartitions(tagged_cycle(6));
    CHECK(r.hits.empty());
    CHECK(!r.aborted_four_cycle);
    CHECK(r.a_masks_kept == 0);
    CHECK(r.b_masks_kept == 0);
    CHECK(r.assignments_tried == 0);
  }
  SUBCASE("eight cycle keeps one mask per side") {
    auto r = search_bipartitions(tagged_cycle(8));
    CHECK(r.hits.empty());
    CHECK(r.a_masks_kept == 1);
    CHECK(r.b_masks_kept == 1);
    CHECK(r.assignments_tried == 1);
  }
  SUBCASE("four cycle aborts with a witness") {
    auto r = search_bipartitions(tagged_cycle(4));
    CHECK(r.hits.empty());
    CHECK(r.aborted_four_cycle);
    CHECK(r.four_cycle.length() == 4);
  }
  SUBCASE("full order 3 plane has none") {
    auto r = search_bipartitions(pg_incidence(3), with_threads(4));
    CHECK(r.hits.empty());
    CHECK(r.assignments_tried == 54756);
    CHECK(r.a_masks_kept == 234);
    CHECK(r.b_masks_kept == 234);
  }
}

TEST_CASE("bipartition search finds the canonical arithmetic partition") {
  auto params = arithmetic_example_9();
  Graph g = arithmetic_graph(params);
  auto canonical = arithmetic_partition(params).normalized(g);
  auto r = search_bipartitions(g, with_threads(4));
  bool found = false;
  for (const auto& hit : r.hits)
    if (hit.normalized(g) == canonical) found = true;
  CHECK(found);
}

TEST_CASE("results do not depend on the worker count") {
  Graph g = pg_incidence(3);
  auto r1 = search_bipartitions(g, with_threads(1));
  auto r7 = search_bipartitions(g, with_threads(7));
  CHECK(r1.assignments_tried == r7.assignments_tried);
  CHECK(r1.hits.size() == r7.hits.size());
}

TEST_CASE("24-vertex deletion search") {
  auto m = find_minimal_24();
  REQUIRE(m.found);
  CHECK(m.graph.vertex_count() == 24);
  CHECK(m.edge_count == 45);
  CHECK(m.point_deleted == 0);
  CHECK(m.line_deleted == 22);
  CHECK(m.candidates_tried == 10);
  CHECK(verify_sizeable(m.graph, m.partition).verdict);
  auto girth = m.graph.girth();
  REQUIRE(girth.has_value());
  CHECK(*girth >= 6);
  // meets the stored edge bound for its side sizes
  CHECK(zarankiewicz_table_check(m.graph));

  // every point lies on the deleted line here, so each side keeps both parts
  for (int s = 0; s <= 1; ++s)
    for (int t = 0; t <= 1; ++t)
      CHECK(m.graph.is_connected_subset(block_union(m.graph, m.partition, s, t)));
}

TEST_CASE("23-vertex refutation") {
  auto r = refute_23();
  CHECK(r.partitions_found == 0);
  CHECK(r.candidate_edges == 42);
  CHECK(r.dual_edges == 42);
  CHECK(r.candidate_sides_a == 11);
  CHECK(r.candidate_sides_b == 12);
  CHECK(r.candidate_assignments == 1377);
  CHECK(r.dual_assignments == 1377);
}

TEST_CASE("all-cycles shaped search") {
  SUBCASE("refuted below nine per block with fixed node counts") {
    const long long expected[] = {3, 13, 58, 180};
    for (int n = 2; n <= 5; ++n) {
      auto r = search_all_cycles(n);
      CHECK(!r.found);
      CHECK(r.nodes_explored == expected[n - 2]);
    }
  }
  SUBCASE("found at nine per block") {
    auto r = search_all_cycles(9, with_threads(8));
    REQUIRE(r.found);
    CHECK(r.graph.vertex_count() == 36);
    auto p = SizeablePartition::from_tags(r.graph);
    CHECK(verify_sizeable(r.graph, p).verdict);
    // each defining subgraph is 2-regular and connected: a single cycle
    for (int s = 0; s <= 1; ++s)
      for (int t = 0; t <= 1; ++t) {
        auto verts = block_union(r.graph, p, s, t);
        CHECK(r.graph.is_connected_subset(verts));
        for (int v : verts) {
          int within = 0;
          for (int u : r.graph.neighbors(v))
            if (std::find(verts.begin(), verts.end(), u) != verts.end()) ++within;
          CHECK(within == 2);
        }
      }
  }
  SUBCASE("rejects impossible sizes") {
    CHECK_THROWS_AS(search_all_cycles(1), std::invalid_argument);
    CHECK_THROWS_AS(search_all_cycles(17), std::invalid_argument);
  }
}

TEST_CASE("all-paths shaped search") {
  SUBCASE("refuted at small totals with fixed node counts") {
    const std::pair<int, long long> expected[] = {{4, 3}, {8, 54}, {10, 99}, {12, 156}, {13, 149}};
    for (auto [total, nodes] : expected) {
      auto r = search_all_paths(total);
      CHECK(!r.found);
      CHECK(r.nodes_explored == nodes);
    }
  }
  SUBCASE("found at thirty one") {
    auto r = search_all_paths(31, with_threads(8));
    REQUIRE(r.found);
    CHECK(r.graph.vertex_count() == 31);
    auto p = SizeablePartition::from_tags(r.graph);
    CHECK(verify_sizeable(r.graph, p).verdict);
    // each defining subgraph is a path: connected, acyclic, max degree 2
    for (int s = 0; s <= 1; ++s)
      for (int t = 0; t <= 1; ++t) {
        auto verts = block_union(r.graph, p, s, t);
        CHECK(r.graph.is_connected_subset(verts));
        int within_edges = 0;
        for (int v : verts) {
          int within = 0;
          for (int u : r.graph.neighbors(v))
            if (std::find(verts.begin(), verts.end(), u) != verts.end()) ++within;
          CHECK(within <= 2);
          within_edges += within;
        }
        CHECK(within_edges == 2 * (static_cast<int>(verts.size()) - 1));
      }
  }
}

TEST_CASE("checkpointing does not change results") {
  std::string path = "ck_cycles5.json";
  std::remove(path.c_str());
  SearchOptions with = with_threads(2);
  with.checkpoint = path;
  auto first = search_all_cycles(5, with);
  CHECK(!first.found);
  CHECK(first.nodes_explored == 180);
  // second run resumes from the completed set and reports the same totals
  auto second = search_all_cycles(5, with);
  CHECK(!second.found);
  CHECK(second.nodes_explored == 180);
  // a different search key ignores the stale file
  auto other = search_all_cycles(4, with);
  CHECK(other.nodes_explored == 58);
  std::remove(path.c_str());
}

TEST_SUITE_END();
