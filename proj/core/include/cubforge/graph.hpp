#pragma once

// Finite multigraphs with optional side (A/B) and part (0/1) vertex tags.
// Vertex ids are dense integers starting at 0; edges are referenced by id and
// may be parallel.  Self-loops are rejected everywhere.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubforge {

enum class Side : std::uint8_t { none, A, B };

constexpr int kNoPart = -1;

struct VertexLabel {
  Side side = Side::none;
  int part = kNoPart;  // 0 or 1 when tagged
  std::string name;    // display only, ids are authoritative
};

struct IncidentEdge {
  int edge = -1;
  int to = -1;
};

// Closed cycle given as its vertex sequence v0, v1, ..., v_{k-1}, v0 implied.
struct CycleWitness {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) { for (int i = 0; i < n; ++i) add_vertex({}); }

  int add_vertex(VertexLabel label = {});
  // Throws std::invalid_argument on self-loops or unknown endpoints.
  int add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const VertexLabel& label(int v) const;
  VertexLabel& label(int v);
  Side side(int v) const { return label(v).side; }
  int part(int v) const { return label(v).part; }

  const std::pair<int, int>& edge(int e) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int other_endpoint(int e, int v) const;

  const std::vector<IncidentEdge>& incident(int v) const;
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  // Sorted, with multiplicity.
  std::vector<int> neighbors(int v) const;

  std::vector<int> vertices_with(Side s) const;
  std::vector<int> vertices_with(Side s, int part) const;
  bool all_sides_tagged() const;

  // Every edge joins an A vertex to a B vertex.
  bool is_crossing() const;
  // No parallel edges; the witness is a pair of distinct edge ids joining the
  // same endpoints.
  std::optional<std::pair<int, int>> parallel_pair() const;
  bool is_simple() const { return !parallel_pair().has_value(); }

  // Lexicographically least 4-cycle (a, b, c, d) of a simple graph where a is
  // the least vertex on the cycle and b < d are its cycle neighbours.
  // Parallel edges are ignored here; they are 2-cycles, reported separately.
  std::optional<CycleWitness> find_four_cycle() const;

  // Length of a shortest cycle; nullopt when acyclic.  A parallel pair counts
  // as a 2-cycle.
  std::optional<int> girth() const;

  // Connectivity of the induced subgraph on `subset`.  The empty subset is
  // not connected; a single vertex is.
  bool is_connected_subset(const std::vector<int>& subset) const;
  // Components of the induced subgraph, each sorted, in order of least member.
  std::vector<std::vector<int>> components_within(const std::vector<int>& subset) const;
  bool is_connected() const;

 private:
  void check_vertex(int v) const;

  std::vector<VertexLabel> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<IncidentEdge>> adj_;
};

const char* to_string(Side s);

}  // namespace cubforge
