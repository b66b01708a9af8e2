#pragma once

// The full cubical subcomplex X inside K13 x K21 x K32 spanned by the five
// vertex conditions: all coordinates in A_i, all in B_{i-1}, or one defining
// pair [v_i, v_j] an edge of a sizeable graph with the third coordinate free.

#include <array>
#include <optional>

#include <json.hpp>

#include "cubforge/cubical.hpp"
#include "cubforge/graph.hpp"
#include "cubforge/sizeable.hpp"

namespace cubforge {

enum class VertexType { type1_a, type1_b, type2_g1, type2_g2, type2_g3 };
const char* to_string(VertexType t);

class XSpec {
 public:
  // Each graph must verify sizeable with its partition; throws otherwise.
  XSpec(Graph g1, SizeablePartition p1, Graph g2, SizeablePartition p2, Graph g3,
        SizeablePartition p3);
  // Parts read off the graphs' tags.
  static XSpec from_tagged(Graph g1, Graph g2, Graph g3);

  const Graph& gamma(int i) const { return gammas_[i - 1]; }          // i in 1..3
  const SizeablePartition& partition(int i) const { return parts_[i - 1]; }

  // Factor f of the product: 0 -> K13, 1 -> K21, 2 -> K32.  A-side vertices
  // come first; the graph carries side/part tags copied from the gammas.
  const Graph& factor(int f) const { return factors_[f]; }

  // Factor-vertex translation.  a_of(f): gamma vertex ids (in gamma a_index(f))
  // backing the A side of factor f, in factor order; likewise b_of.
  int factor_vertex_from_a(int f, int gamma_vertex) const;
  int factor_vertex_from_b(int f, int gamma_vertex) const;
  bool factor_vertex_is_a(int f, int fv) const;
  int gamma_vertex_of(int f, int fv) const;      // underlying gamma vertex id
  int gamma_index_of(int f, int fv) const;       // which gamma (1..3) it lives in

  std::array<long long, 3> sizes_a() const;
  std::array<long long, 3> sizes_b() const;
  std::array<long long, 3> sizes_e() const;

 private:
  std::array<Graph, 3> gammas_;
  std::array<SizeablePartition, 3> parts_;
  std::array<Graph, 3> factors_;
  // per factor: map from gamma vertex id to factor vertex id (A then B side)
  std::array<std::vector<int>, 3> a_map_, b_map_;
  std::array<std::vector<int>, 3> back_gamma_, back_vertex_;  // factor vertex -> origin
};

// Which gammas feed each factor: factor f's A side comes from gamma a_gamma[f],
// its B side from gamma b_gamma[f] (1-based).
constexpr int kFactorAGamma[3] = {1, 2, 3};
constexpr int kFactorBGamma[3] = {3, 1, 2};

ProductComplex build_x(const XSpec& spec);

VertexType classify_vertex(const XSpec& spec, const std::array<int, 3>& v);

struct LinkTableRow {
  VertexType type;
  std::array<bool, 3> coord_in_a{};  // the side pattern of the class
  long long vertex_count = 0;        // X vertices in the class
  long long cells0 = 0, cells1 = 0, cells2 = 0;  // summed link cells
};

struct LinkTableReport {
  bool ok = true;
  std::vector<LinkTableRow> rows;    // the 8 side-pattern classes
  std::optional<std::array<int, 3>> first_mismatch;
  std::string mismatch_reason;
  nlohmann::json to_json() const;
};

// Checks every vertex link against the predicted join (N-sets and gamma
// factors located by coordinate tags) and accumulates per-class cell counts.
LinkTableReport verify_link_table(const XSpec& spec, const ProductComplex& x, int threads = 0);

struct GammaEdgeReport {
  bool ok = true;
  long long gamma_edges = 0;         // edges whose link is one of the gammas
  long long bipartite_edges = 0;     // all other edges: complete bipartite links
  std::array<long long, 3> per_gamma{};  // gamma edge counts by defining graph
  int min_gamma_girth = 0;           // minimum girth over gamma edge links
  std::optional<CellTriple> first_failure;
  std::string failure_reason;
  nlohmann::json to_json() const;
};

// Classifies the link of every edge of X and certifies girth >= 6 on the
// gamma ones; the hyperbolicity certificate.
GammaEdgeReport gamma_edge_certificate(const XSpec& spec, const ProductComplex& x, int threads = 0);

// The printed 25-term closed form for chi(X).
long long euler_formula_x(const std::array<long long, 3>& a, const std::array<long long, 3>& b,
                          const std::array<long long, 3>& e);

}  // namespace cubforge
