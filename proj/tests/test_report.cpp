#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "cubforge/digest.hpp"
#include "cubforge/graph_io.hpp"
#include "cubforge/parallel.hpp"
#include "cubforge/report.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("report");

TEST_CASE("manifest serialization") {
  RunManifest m;
  m.command = "cubforge demo";
  m.input_digests = {{"left", "aa"}, {"right", "bb"}};
  m.seed = 7;
  m.threads_requested = 3;
  auto j = m.to_json();
  CHECK(j["command"] == "cubforge demo");
  CHECK(j["inputs"]["left"] == "aa");
  CHECK(j["inputs"]["right"] == "bb");
  CHECK(j["seed"] == 7);
  CHECK(j["threads_requested"] == 3);
  CHECK(j["version"] == kVersion);
  // wall clock only shows up when measured
  CHECK(!j.contains("wall_clock_ms"));
  m.wall_clock_ms = 12;
  CHECK(m.to_json()["wall_clock_ms"] == 12);

  auto rep = make_report(m, nlohmann::json{{"answer", 42}});
  CHECK(rep["manifest"]["command"] == "cubforge demo");
  CHECK(rep["result"]["answer"] == 42);
}

TEST_CASE("thread resolution order") {
  unsetenv("CUBFORGE_THREADS");
  CHECK(resolve_threads(4) == 4);
  CHECK(resolve_threads(0) >= 1);
  setenv("CUBFORGE_THREADS", "2", 1);
  CHECK(resolve_threads(0) == 2);
  CHECK(resolve_threads(5) == 5);  // explicit wins over the environment
  unsetenv("CUBFORGE_THREADS");
}

TEST_CASE("parallel for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, 7, [&](long long i) { ++hits[i]; });
  for (int h : hits) CHECK(h == 1);
  parallel_for(0, 3, [&](long long) { hits[0] = 99; });
  CHECK(hits[0] == 1);
}

TEST_CASE("file digests") {
  const std::string path = "digest_input.txt";
  {
    std::ofstream out(path, std::ios::binary);
    out << "abc";
  }
  CHECK(file_digest_hex(path) == fnv1a64_hex("abc"));
  std::remove(path.c_str());
  CHECK_THROWS_AS(file_digest_hex(path), std::runtime_error);
}

TEST_CASE("graph files dispatch on extension") {
  Graph g;
  g.add_vertex({Side::A, 0, "p"});
  g.add_vertex({Side::B, 1, "q"});
  g.add_edge(0, 1);

  save_graph_json(g, "io_roundtrip.json");
  Graph back = load_graph_file("io_roundtrip.json");
  CHECK(graph_to_json(back) == graph_to_json(g));
  std::remove("io_roundtrip.json");

  {
    std::ofstream out("io_list.edges");
    out << "# two disjoint edges\n0 1\n2 3\n";
  }
  Graph listed = load_graph_file("io_list.edges");
  CHECK(listed.vertex_count() == 4);
  CHECK(listed.edge_count() == 2);
  std::remove("io_list.edges");

  CHECK_THROWS_AS(load_graph_file("no_such_file.edges"), std::runtime_error);
}

TEST_SUITE_END();
