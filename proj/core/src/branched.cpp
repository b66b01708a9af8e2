#include "cubforge/branched.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubforge/parallel.hpp"
#include "cubforge/projective.hpp"

namespace cubforge {

using nlohmann::json;

json TwoFullReport::to_json() const {
  json j{{"ok", ok},
         {"tagged", tagged},
         {"crossing", crossing},
         {"connected", connected},
         {"min_valence", min_valence},
         {"valence_ge_4", valence_ge_4}};
  if (bad_edge) j["bad_edge"] = *bad_edge;
  return j;
}

TwoFullReport check_two_full(const Graph& g) {
  TwoFullReport rep;
  rep.tagged = g.all_sides_tagged();
  rep.crossing = true;
  if (rep.tagged) {
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& [u, v] = g.edge(e);
      if (g.side(u) == g.side(v)) {
        rep.crossing = false;
        rep.bad_edge = e;
        break;
      }
    }
  } else {
    rep.crossing = false;
  }
  rep.connected = g.vertex_count() > 0 && g.is_connected();
  rep.min_valence = g.vertex_count() == 0 ? 0 : g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    rep.min_valence = std::min(rep.min_valence, g.degree(v));
  rep.valence_ge_4 = g.vertex_count() > 0 && rep.min_valence >= 4;
  rep.ok = rep.tagged && rep.crossing && rep.connected;
  return rep;
}

Graph cage_graph(int p) {
  if (!is_prime(p) || p <= 3)
    throw std::invalid_argument("cage generator needs a prime p > 3, got " + std::to_string(p));
  Graph g;
  g.add_vertex({Side::A, kNoPart, "a"});
  g.add_vertex({Side::B, kNoPart, "b"});
  for (int i = 0; i < p - 1; ++i) g.add_edge(0, 1);
  return g;
}

long long BranchingLocus::zero_cells() const {
  long long n = 0;
  for (const auto& p : piece_zero) n += static_cast<long long>(p.size());
  return n;
}

long long BranchingLocus::one_cells() const {
  long long n = 0;
  for (const auto& p : piece_one) n += static_cast<long long>(p.size());
  return n;
}

std::array<long long, 3> BranchingLocus::piece_zero_counts() const {
  return {static_cast<long long>(piece_zero[0].size()), static_cast<long long>(piece_zero[1].size()),
          static_cast<long long>(piece_zero[2].size())};
}

std::array<long long, 3> BranchingLocus::piece_one_counts() const {
  return {static_cast<long long>(piece_one[0].size()), static_cast<long long>(piece_one[1].size()),
          static_cast<long long>(piece_one[2].size())};
}

bool BranchingLocus::pieces_disjoint() const {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto a = piece_zero[i];
      auto b = piece_zero[j];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::vector<CellTriple> inter;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (!inter.empty()) return false;
      a = piece_one[i];
      b = piece_one[j];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      inter.clear();
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (!inter.empty()) return false;
    }
  return true;
}

std::vector<CellTriple> BranchingLocus::all_cells() const {
  std::vector<CellTriple> out;
  for (const auto& p : piece_zero) out.insert(out.end(), p.begin(), p.end());
  for (const auto& p : piece_one) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BranchingLocus branching_locus(const Graph& g1, const Graph& g2, const Graph& g3) {
  const Graph* gs[3] = {&g1, &g2, &g3};
  for (int i = 0; i < 3; ++i)
    if (!gs[i]->all_sides_tagged())
      throw std::invalid_argument("graph " + std::to_string(i + 1) + " is missing side tags");

  BranchingLocus loc;
  // piece f: full factor f over the A side of the next and B side of the
  // previous coordinate (cyclically), matching the three printed products.
  for (int f = 0; f < 3; ++f) {
    const int na = (f + 1) % 3, nb = (f + 2) % 3;
    const auto a_side = gs[na]->vertices_with(Side::A);
    const auto b_side = gs[nb]->vertices_with(Side::B);
    for (int u = 0; u < gs[f]->vertex_count(); ++u)
      for (int x : a_side)
        for (int y : b_side) {
          CellTriple t;
          t.c[f] = {false, u};
          t.c[na] = {false, x};
          t.c[nb] = {false, y};
          loc.piece_zero[f].push_back(t);
        }
    for (int e = 0; e < gs[f]->edge_count(); ++e)
      for (int x : a_side)
        for (int y : b_side) {
          CellTriple t;
          t.c[f] = {true, e};
          t.c[na] = {false, x};
          t.c[nb] = {false, y};
          loc.piece_one[f].push_back(t);
        }
  }
  return loc;
}

json LocusValidation::to_json() const {
  json j{{"ok", ok}, {"cells_checked", cells_checked}};
  if (failing_cell) {
    j["failing_cell"] = failing_cell->to_json();
    j["reason"] = reason;
  }
  return j;
}

namespace {

// faces of a cell: drop one edge coordinate to an endpoint
std::vector<CellTriple> cell_faces(const ProductComplex& k, const CellTriple& t) {
  std::vector<CellTriple> out;
  for (int f = 0; f < 3; ++f) {
    if (!t.c[f].is_edge) continue;
    const auto& [u, v] = k.factor(f).edge(t.c[f].id);
    for (int endpoint : {u, v}) {
      CellTriple face = t;
      face.c[f] = {false, endpoint};
      out.push_back(face);
    }
  }
  return out;
}

bool in_set(const std::vector<CellTriple>& sorted, const CellTriple& t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

}  // namespace

LocusValidation validate_locus(const ProductComplex& k, const std::vector<CellTriple>& cells,
                               int threads) {
  std::vector<CellTriple> lset(cells);
  std::sort(lset.begin(), lset.end());
  lset.erase(std::unique(lset.begin(), lset.end()), lset.end());

  for (const auto& t : lset) {
    if (!k.has_cell(t)) throw std::invalid_argument("locus cell is not a cell of the complex");
    for (const auto& face : cell_faces(k, t))
      if (!in_set(lset, face))
        throw std::invalid_argument("locus is not closed under faces");
  }

  LocusValidation rep;
  rep.cells_checked = static_cast<long long>(lset.size());
  const long long n = rep.cells_checked;
  std::vector<std::string> fail(n);

  parallel_for(n, threads, [&](long long idx) {
    const CellTriple& c = lset[idx];
    const int dim = c.dim();
    if (dim >= 3) {
      fail[idx] = "top-dimensional cell: link complement is empty";
      return;
    }
    if (dim == 0) {
      std::array<int, 3> v{c.c[0].id, c.c[1].id, c.c[2].id};
      LinkComplex lk = k.vertex_link(v);
      std::vector<char> in_locus(lk.verts.size(), 0);
      for (std::size_t i = 0; i < lk.verts.size(); ++i) {
        CellTriple edge_cell = c;
        edge_cell.c[lk.verts[i].coord] = {true, lk.verts[i].edge};
        in_locus[i] = in_set(lset, edge_cell);
      }
      // full subcomplex condition: no induced cell of the ambient link may
      // join locus directions without its spanned cell being in the locus
      for (const auto& [p, q] : lk.edges)
        if (in_locus[p] && in_locus[q]) {
          CellTriple sq = c;
          sq.c[lk.verts[p].coord] = {true, lk.verts[p].edge};
          sq.c[lk.verts[q].coord] = {true, lk.verts[q].edge};
          if (!in_set(lset, sq)) {
            fail[idx] = "locus link not full: induced square direction missing";
            return;
          }
        }
      for (const auto& t : lk.triangles)
        if (in_locus[t[0]] && in_locus[t[1]] && in_locus[t[2]]) {
          CellTriple cube = c;
          for (int s : t) cube.c[lk.verts[s].coord] = {true, lk.verts[s].edge};
          if (!in_set(lset, cube)) {
            fail[idx] = "locus link not full: induced cube direction missing";
            return;
          }
        }
      std::vector<char> keep(lk.verts.size());
      for (std::size_t i = 0; i < lk.verts.size(); ++i) keep[i] = !in_locus[i];
      LinkComplex rest = lk.restrict_to(keep);
      if (rest.verts.empty()) {
        fail[idx] = "link complement empty";
        return;
      }
      if (!link_connected(rest)) fail[idx] = "link complement disconnected";
      return;
    }
    // dim 1 or 2: transverse link with locus directions removed
    if (dim == 1) {
      EdgeLink el = k.edge_link(c);
      std::vector<char> in_locus(el.squares.size(), 0);
      for (std::size_t i = 0; i < el.squares.size(); ++i) {
        CellTriple sq = c;
        sq.c[el.squares[i].coord] = {true, el.squares[i].edge};
        in_locus[i] = in_set(lset, sq);
      }
      // fullness: a cube spanned by two locus squares must be a locus cell,
      // but the locus has no 3-cells here, so any such pair fails
      for (const auto& [p, q] : el.graph.edges())
        if (in_locus[p] && in_locus[q]) {
          CellTriple cube = c;
          cube.c[el.squares[p].coord] = {true, el.squares[p].edge};
          cube.c[el.squares[q].coord] = {true, el.squares[q].edge};
          if (!in_set(lset, cube)) {
            fail[idx] = "locus link not full at an edge";
            return;
          }
        }
      LinkComplex rest;
      std::vector<int> remap(el.squares.size(), -1);
      for (std::size_t i = 0; i < el.squares.size(); ++i)
        if (!in_locus[i]) {
          remap[i] = static_cast<int>(rest.verts.size());
          rest.verts.push_back(el.squares[i]);
        }
      for (const auto& [p, q] : el.graph.edges())
        if (remap[p] >= 0 && remap[q] >= 0) rest.edges.emplace_back(remap[p], remap[q]);
      if (rest.verts.empty()) {
        fail[idx] = "link complement empty";
        return;
      }
      if (!link_connected(rest)) fail[idx] = "link complement disconnected";
      return;
    }
    // dim 2: the transverse directions are the cubes over this square
    std::vector<CellTriple> cubes;
    int free_coord = 0;
    for (int f = 0; f < 3; ++f)
      if (!c.c[f].is_edge) free_coord = f;
    const Graph& fg = k.factor(free_coord);
    for (const auto& ie : fg.incident(c.c[free_coord].id)) {
      CellTriple cube = c;
      cube.c[free_coord] = {true, ie.edge};
      if (k.has_cell(cube) && !in_set(lset, cube)) cubes.push_back(cube);
    }
    std::sort(cubes.begin(), cubes.end());
    cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
    if (cubes.empty())
      fail[idx] = "link complement empty";
    else if (cubes.size() > 1)
      fail[idx] = "link complement disconnected";
  });

  rep.ok = true;
  for (long long i = 0; i < n; ++i)
    if (!fail[i].empty()) {
      rep.ok = false;
      rep.failing_cell = lset[i];
      rep.reason = fail[i];
      break;
    }
  return rep;
}

LocusValidation validate_locus(const ProductComplex& k, const BranchingLocus& l, int threads) {
  if (!l.pieces_disjoint()) {
    LocusValidation rep;
    rep.ok = false;
    rep.reason = "locus pieces intersect";
    return rep;
  }
  return validate_locus(k, l.all_cells(), threads);
}

std::optional<int> RetractGraph::vertex_of(int vi, int vj) const {
  auto it = std::lower_bound(vertex_pair.begin(), vertex_pair.end(), std::make_pair(vi, vj));
  if (it == vertex_pair.end() || *it != std::make_pair(vi, vj)) return std::nullopt;
  return static_cast<int>(it - vertex_pair.begin());
}

RetractGraph retract_graph(const Graph& gi, const Graph& gj) {
  if (!gi.all_sides_tagged() || !gj.all_sides_tagged())
    throw std::invalid_argument("retract needs side tags on both graphs");
  RetractGraph out;
  for (int u = 0; u < gi.vertex_count(); ++u)
    for (int w = 0; w < gj.vertex_count(); ++w) {
      if (gi.side(u) == Side::A && gj.side(w) == Side::B) continue;  // removed corners
      out.vertex_pair.emplace_back(u, w);
      out.graph.add_vertex({Side::none, kNoPart,
                            "(" + std::to_string(u) + "," + std::to_string(w) + ")"});
    }
  // gi edges over A-side gj vertices
  for (int e = 0; e < gi.edge_count(); ++e) {
    const auto& [u, v] = gi.edge(e);
    for (int w = 0; w < gj.vertex_count(); ++w) {
      if (gj.side(w) != Side::A) continue;
      out.graph.add_edge(*out.vertex_of(u, w), *out.vertex_of(v, w));
    }
  }
  // B-side gi vertices over gj edges
  for (int u = 0; u < gi.vertex_count(); ++u) {
    if (gi.side(u) != Side::B) continue;
    for (int e = 0; e < gj.edge_count(); ++e) {
      const auto& [w, x] = gj.edge(e);
      out.graph.add_edge(*out.vertex_of(u, w), *out.vertex_of(u, x));
    }
  }
  return out;
}

EulerParams EulerParams::from_graphs(const Graph& g1, const Graph& g2, const Graph& g3,
                                     long long q12, long long q23, long long q31) {
  EulerParams p;
  const Graph* gs[3] = {&g1, &g2, &g3};
  for (int i = 0; i < 3; ++i) {
    p.a[i] = static_cast<long long>(gs[i]->vertices_with(Side::A).size());
    p.b[i] = static_cast<long long>(gs[i]->vertices_with(Side::B).size());
    p.v[i] = gs[i]->vertex_count();
    p.e[i] = gs[i]->edge_count();
  }
  p.q12 = q12;
  p.q23 = q23;
  p.q31 = q31;
  p.validate();
  return p;
}

void EulerParams::validate() const {
  for (int i = 0; i < 3; ++i) {
    if (v[i] != a[i] + b[i]) throw std::invalid_argument("vertex count must split as a + b");
    if (a[i] < 0 || b[i] < 0 || e[i] < 0) throw std::invalid_argument("negative count");
  }
  if (q12 < 1 || q23 < 1 || q31 < 1) throw std::invalid_argument("cover degrees must be >= 1");
}

long long euler_formula_branched(const EulerParams& p) {
  p.validate();
  const long long v1 = p.v[0], v2 = p.v[1], v3 = p.v[2];
  const long long a1 = p.a[0], a2 = p.a[1], a3 = p.a[2];
  const long long b1 = p.b[0], b2 = p.b[1], b3 = p.b[2];
  const long long e1 = p.e[0], e2 = p.e[1], e3 = p.e[2];
  const long long q = p.q12 * p.q23 * p.q31;
  return q * (v1 * v2 * v3 + a1 * b2 * e3 + b1 * e2 * a3 + e1 * a2 * b3 + e1 * e2 * v3 +
              e1 * v2 * e3 + v1 * e2 * e3 - v1 * a2 * b3 - b1 * v2 * a3 - a1 * b2 * v3 -
              e1 * v1 * v2 - v1 * e2 * v3 - v1 * v2 * e3 - e1 * e2 * e3) -
         p.q12 * p.q31 * a2 * b3 * (e1 - v1) - p.q12 * p.q23 * a3 * b1 * (e2 - v2) -
         p.q23 * p.q31 * a1 * b2 * (e3 - v3);
}

json BranchedCensus::to_json() const {
  return json{{"k_cells", k_cells},
              {"locus_zero", locus_zero},
              {"locus_one", locus_one},
              {"x_cells", x_cells},
              {"census_chi", census_chi},
              {"formula_chi", formula_chi},
              {"match", match},
              {"discrepancy", discrepancy},
              {"isolated_delta", isolated_delta},
              {"discrepancy_isolated", discrepancy_isolated}};
}

BranchedCensus euler_cell_census(const Graph& g1, const Graph& g2, const Graph& g3,
                                 const EulerParams& p) {
  p.validate();
  BranchedCensus out;
  ProductComplex k = ProductComplex::full_product(g1, g2, g3);
  for (int d = 0; d <= 3; ++d) out.k_cells[d] = k.count_cells(d);

  BranchingLocus loc = branching_locus(g1, g2, g3);
  out.locus_zero = loc.piece_zero_counts();
  out.locus_one = loc.piece_one_counts();

  const long long q = p.q12 * p.q23 * p.q31;
  const std::array<long long, 3> piece_mult{p.q12 * p.q31, p.q12 * p.q23, p.q23 * p.q31};

  long long l0 = loc.zero_cells(), l1 = loc.one_cells();
  out.x_cells[0] = q * (out.k_cells[0] - l0);
  out.x_cells[1] = q * (out.k_cells[1] - l1);
  for (int f = 0; f < 3; ++f) {
    out.x_cells[0] += piece_mult[f] * out.locus_zero[f];
    out.x_cells[1] += piece_mult[f] * out.locus_one[f];
  }
  out.x_cells[2] = q * out.k_cells[2];
  out.x_cells[3] = q * out.k_cells[3];

  out.census_chi = out.x_cells[0] - out.x_cells[1] + out.x_cells[2] - out.x_cells[3];
  out.formula_chi = euler_formula_branched(p);
  out.match = out.census_chi == out.formula_chi;
  out.discrepancy = out.census_chi - out.formula_chi;
  out.isolated_delta = q * p.e[0] * p.v[1] * (p.v[0] - p.v[2]);
  out.discrepancy_isolated = out.discrepancy == out.isolated_delta;
  return out;
}

}  // namespace cubforge
