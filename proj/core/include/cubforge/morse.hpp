#pragma once

// Circle-valued Morse data through edge orientations: the part rule on the
// complete bipartite factors, the in/out >= 2 rule on 2-full graphs, the
// ascending and descending links they induce, and the certificate that the
// kernel subgroup is finitely presented but not FP3.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubforge/complex_x.hpp"
#include "cubforge/cubical.hpp"
#include "cubforge/graph.hpp"
#include "cubforge/homology.hpp"

namespace cubforge {

// Direction per edge of one graph: forward means first -> second endpoint of
// the stored pair.
struct EdgeOrientation {
  std::vector<char> forward;

  int tail(const Graph& g, int e) const {
    return forward[e] ? g.edge(e).first : g.edge(e).second;
  }
  int head(const Graph& g, int e) const {
    return forward[e] ? g.edge(e).second : g.edge(e).first;
  }
  bool points_away_from(const Graph& g, int e, int v) const { return tail(g, e) == v; }
  int out_degree(const Graph& g, int v) const;
  int in_degree(const Graph& g, int v) const;
};

// Part rule on a complete bipartite factor: an edge from A part s to B part t
// runs A -> B when s == t and B -> A otherwise.  Throws when a part tag is
// missing.
EdgeOrientation orient_k_graph(const Graph& k);
std::array<EdgeOrientation, 3> orient_k(const XSpec& spec);

// Orientation of a graph with all valences >= 4 such that every vertex has at
// least two incoming and two outgoing edges; throws below valence 4.
EdgeOrientation orient_two_full(const Graph& g);
// Accepts any orientation meeting the in/out >= 2 rule.
bool two_full_orientation_ok(const Graph& g, const EdgeOrientation& o);

// Full subcomplex of the vertex link on the factor edges pointing away from
// (resp. toward) the vertex.  Throws when v is not in x.
LinkComplex ascending_link(const ProductComplex& x, const std::array<EdgeOrientation, 3>& o,
                           const std::array<int, 3>& v);
LinkComplex descending_link(const ProductComplex& x, const std::array<EdgeOrientation, 3>& o,
                            const std::array<int, 3>& v);

struct VertexEvidence {
  std::array<int, 3> v{};
  VertexType type;
  HomologyProfile asc, desc;
};

struct NotF3ClassRow {
  VertexType type;
  std::array<bool, 3> coord_in_a{};
  long long vertices = 0;
  long long asc_h2_nonzero = 0, desc_h2_nonzero = 0;
  bool all_trivial = true;  // every asc/desc profile in the class fully vanishes
};

struct NotF3Report {
  bool ok = false;
  bool h01_all_zero = false;    // reduced H0 and H1 vanish in every asc/desc link
  bool dimension_le_2 = true;   // links have no 3-cells, so H3 = 0 for free
  long long vertices_checked = 0;
  long long h2_witnesses = 0;   // vertices with nonzero second homology somewhere
  std::optional<std::array<int, 3>> witness;  // first of them
  HomologyProfile witness_asc, witness_desc;
  std::optional<std::array<int, 3>> failure;  // first vanishing violation
  std::string failure_reason;
  bool type2_all_trivial = true;  // all type 2 asc/desc links have zero reduced homology
  std::vector<NotF3ClassRow> classes;
  std::string connectivity_note;
  std::vector<VertexEvidence> evidence;  // per vertex, only when requested
  nlohmann::json to_json() const;
};

// Checks reduced H0 = H1 = 0 for the ascending and descending link of every
// vertex and finds a vertex with nonzero H2.  Simple connectivity of type 2
// links is a join-structure consequence and is labelled, not recomputed.
NotF3Report not_f3_certificate(const XSpec& spec, const ProductComplex& x, int threads = 0,
                               bool per_vertex_evidence = false);

}  // namespace cubforge
