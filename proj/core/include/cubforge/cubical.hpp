#pragma once

// Cubical subcomplexes of triple products of graphs.  A cell is a triple of
// factor cells (vertex or edge per coordinate); a full subcomplex stores only
// its vertex triples and derives every cube from corner membership.  Factor
// multigraphs are fine: cells carry edge ids, so parallel edges give
// distinct cubes.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cubforge/graph.hpp"

namespace cubforge {

struct Cell {
  bool is_edge = false;
  int id = 0;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

struct CellTriple {
  std::array<Cell, 3> c{};
  int dim() const { return int(c[0].is_edge) + int(c[1].is_edge) + int(c[2].is_edge); }
  bool operator==(const CellTriple&) const = default;
  auto operator<=>(const CellTriple&) const = default;
  nlohmann::json to_json() const;
  static CellTriple from_json(const nlohmann::json& j);
};

// Link complex of a vertex: one link vertex per incident cube edge, tagged by
// (coordinate, factor edge id, far endpoint).  Dimension <= 2, simplicial.
struct LinkVertex {
  int coord = 0;
  int edge = 0;
  int other = 0;
  bool operator==(const LinkVertex&) const = default;
  auto operator<=>(const LinkVertex&) const = default;
};

struct LinkComplex {
  std::vector<LinkVertex> verts;
  std::vector<std::pair<int, int>> edges;          // index pairs, i < j
  std::vector<std::array<int, 3>> triangles;       // index triples, i < j < k
  long long count(int dim) const;
  // Throws std::invalid_argument unless simplicial with all faces present.
  void validate() const;
  // Full subcomplex on a subset of link vertices (keep[i] per vertex).
  LinkComplex restrict_to(const std::vector<char>& keep) const;
};

// Connectivity of the 1-skeleton; empty complexes are not connected.
bool link_connected(const LinkComplex& l);

struct FlagResult {
  bool flag = true;
  std::array<int, 3> counterexample{-1, -1, -1};  // empty triangle when !flag
};

// True iff every 3-clique in the edge graph spans a stored triangle.
FlagResult is_flag(const LinkComplex& l);

// Link of an edge: vertices are the squares at it, edges the 3-cubes.
struct EdgeLink {
  Graph graph;                     // side A = lower free coordinate, B = higher
  std::vector<LinkVertex> squares; // tag of each graph vertex
};

class ProductComplex {
 public:
  // Full subcomplex spanned by `verts`; triples must reference factor vertices.
  ProductComplex(Graph f1, Graph f2, Graph f3, std::vector<std::array<int, 3>> verts);
  static ProductComplex full_product(Graph f1, Graph f2, Graph f3);

  const Graph& factor(int i) const { return factors_[i]; }
  const std::vector<std::array<int, 3>>& vertices() const { return verts_; }

  bool has_vertex(int u1, int u2, int u3) const;
  bool has_vertex(const std::array<int, 3>& v) const { return has_vertex(v[0], v[1], v[2]); }
  // All 2^dim corners present.
  bool has_cell(const CellTriple& t) const;

  long long count_cells(int dim, int threads = 0) const;
  // Materialized list in canonical order; meant for small complexes and tests.
  std::vector<CellTriple> cells(int dim) const;
  long long euler_direct(int threads = 0) const;

  LinkComplex vertex_link(const std::array<int, 3>& v) const;
  EdgeLink edge_link(const CellTriple& e) const;

  // Test hook for the face-closure invariant.
  bool faces_closed() const;

 private:
  std::array<Graph, 3> factors_;
  std::array<int, 3> n_{};                  // factor vertex counts
  std::vector<std::array<int, 3>> verts_;   // sorted
  std::vector<std::uint64_t> present_;      // bitset over n1*n2*n3

  std::size_t pack(int u1, int u2, int u3) const {
    return (static_cast<std::size_t>(u1) * n_[1] + u2) * n_[2] + u3;
  }
  template <typename Fn>
  void for_each_cell(int dim, long long first_coord_index, Fn&& fn) const;
};

}  // namespace cubforge
