#pragma once

// Branched-cover ingredients over triple products of 2-full graphs: the
// three-piece branching locus, its local convexity and link-complement
// checks, the deformation retract graphs of the punctured double products,
// and the Euler characteristic bookkeeping for the covers.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubforge/cubical.hpp"
#include "cubforge/graph.hpp"

namespace cubforge {

struct TwoFullReport {
  bool ok = false;          // tagged, crossing and connected
  bool tagged = false;
  bool crossing = false;
  bool connected = false;
  int min_valence = 0;
  bool valence_ge_4 = false;  // extra hypothesis used by the cover theorems
  std::optional<int> bad_edge;  // first non-crossing edge
  nlohmann::json to_json() const;
};

// 2-full: connected with an A/B division such that every edge crosses.
TwoFullReport check_two_full(const Graph& g);

// Two vertices joined by p-1 parallel edges; throws unless p is a prime > 3
// (below that the valence drops under 4).
Graph cage_graph(int p);

// The three pieces, kept separate: full first factor over A x B corners,
// cyclically.  One-dimensional by construction.
struct BranchingLocus {
  std::array<std::vector<CellTriple>, 3> piece_zero, piece_one;
  long long zero_cells() const;
  long long one_cells() const;
  std::array<long long, 3> piece_zero_counts() const;
  std::array<long long, 3> piece_one_counts() const;
  bool pieces_disjoint() const;
  std::vector<CellTriple> all_cells() const;  // sorted union
};

BranchingLocus branching_locus(const Graph& g1, const Graph& g2, const Graph& g3);

struct LocusValidation {
  bool ok = false;
  long long cells_checked = 0;
  std::optional<CellTriple> failing_cell;
  std::string reason;
  nlohmann::json to_json() const;
};

// Checks, for every cell c of the locus: the locus link at c is a full
// subcomplex of the ambient link (local convexity), and the ambient link
// minus the locus directions is non-empty and connected.  `cells` may be any
// subcomplex of k, any dimensions; throws if it is not closed under faces.
LocusValidation validate_locus(const ProductComplex& k, const std::vector<CellTriple>& cells,
                               int threads = 0);
LocusValidation validate_locus(const ProductComplex& k, const BranchingLocus& l, int threads = 0);

// Deformation retract of the double product with the A x B corners removed:
// all of gi over the A side of gj, plus the B side of gi over all of gj.
struct RetractGraph {
  Graph graph;
  std::vector<std::pair<int, int>> vertex_pair;  // graph vertex -> (gi vertex, gj vertex)
  std::optional<int> vertex_of(int vi, int vj) const;
};

RetractGraph retract_graph(const Graph& gi, const Graph& gj);

struct EulerParams {
  std::array<long long, 3> v{}, a{}, b{}, e{};
  long long q12 = 1, q23 = 1, q31 = 1;
  static EulerParams from_graphs(const Graph& g1, const Graph& g2, const Graph& g3, long long q12,
                                 long long q23, long long q31);
  void validate() const;  // v = a + b, everything non-negative, q >= 1
};

// The closed form for the Euler characteristic of the branched cover, stored
// exactly as printed.
long long euler_formula_branched(const EulerParams& p);

struct BranchedCensus {
  std::array<long long, 4> k_cells{};                   // cells of the full product by dim
  std::array<long long, 3> locus_zero{}, locus_one{};   // per piece
  std::array<long long, 4> x_cells{};                   // census cell counts of the cover
  long long census_chi = 0;
  long long formula_chi = 0;
  bool match = false;
  long long discrepancy = 0;        // census - formula
  // The closed form's first 1-cell product term disagrees with the census by
  // q12*q23*q31 * e1 * v2 * (v1 - v3); zero whenever v1 == v3.
  long long isolated_delta = 0;
  bool discrepancy_isolated = false;
  nlohmann::json to_json() const;
};

// Independent bookkeeping: counts cells of the full product directly, removes
// the locus cells, multiplies by the cover degree and adds the completion
// cells at their piece multiplicities.  The census is the authority.
BranchedCensus euler_cell_census(const Graph& g1, const Graph& g2, const Graph& g3,
                                 const EulerParams& p);

}  // namespace cubforge
