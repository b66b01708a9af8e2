#pragma once

// Exhaustive bipartition searches over C4-free bipartite graphs, and the
// point-line deletion search on the order 3 projective plane.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubforge/graph.hpp"
#include "cubforge/sizeable.hpp"

namespace cubforge {

struct SearchOptions {
  long long limit = -1;        // stop after this many hits; -1 = all
  int threads = 0;             // 0 = resolve from env/hardware
  std::string checkpoint;      // path; empty disables checkpointing
  std::function<void(const std::string&)> log;  // optional progress sink
};

struct BipartitionSearchResult {
  std::vector<SizeablePartition> hits;   // sorted by (A mask, B mask)
  long long assignments_tried = 0;       // reduced (A, B) mask pairs tested
  long long a_masks_kept = 0, b_masks_kept = 0;
  bool aborted_four_cycle = false;       // input had a 4-cycle, nothing to do
  CycleWitness four_cycle;
};

// All part assignments making g sizeable, up to the part swap on each side:
// the least A vertex and least B vertex are pinned to part 0.  Requires side
// tags on every vertex; sides are capped at 63 vertices (mask enumeration).
BipartitionSearchResult search_bipartitions(const Graph& g, const SearchOptions& opts = {});

struct Minimal24Result {
  bool found = false;
  int point_deleted = -1, line_deleted = -1;  // vertex ids in pg_incidence(3)
  Graph graph;                  // 24-vertex subgraph, part tags filled in
  SizeablePartition partition;
  int edge_count = 0;
  long long candidates_tried = 0;
  nlohmann::json to_json() const;
};

// Scans all (point, line) deletions of pg_incidence(3) in id order and
// returns the first deletion whose induced 24-vertex subgraph is sizeable.
Minimal24Result find_minimal_24(const SearchOptions& opts = {});

struct Refute23Result {
  int candidate_edges = 0, dual_edges = 0;
  int candidate_sides_a = 0, candidate_sides_b = 0;
  long long candidate_assignments = 0, dual_assignments = 0;
  long long partitions_found = 0;  // over both candidates; 0 is the theorem
  nlohmann::json to_json() const;
};

// The unique 23-vertex candidate: pg_incidence(3) minus two collinear points
// and the line through them, plus the dual deletion.
Refute23Result refute_23(const SearchOptions& opts = {});

// Long-running optional searches for sizeable graphs whose four defining
// subgraphs all have a prescribed shape.
enum class SubgraphShape { cycle, path };

struct ShapedSearchResult {
  bool found = false;
  Graph graph;                 // tagged witness when found
  long long nodes_explored = 0;
};

// All four blocks have size n and every defining subgraph is a single cycle.
ShapedSearchResult search_all_cycles(int n, const SearchOptions& opts = {});
// Side compositions are scanned; every defining subgraph is a path.
ShapedSearchResult search_all_paths(int total_vertices, const SearchOptions& opts = {});

}  // namespace cubforge
