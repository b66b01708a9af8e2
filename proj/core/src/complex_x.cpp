#include "cubforge/complex_x.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubforge/parallel.hpp"

namespace cubforge {

using nlohmann::json;

const char* to_string(VertexType t) {
  switch (t) {
    case VertexType::type1_a: return "type1-A";
    case VertexType::type1_b: return "type1-B";
    case VertexType::type2_g1: return "type2-G1";
    case VertexType::type2_g2: return "type2-G2";
    case VertexType::type2_g3: return "type2-G3";
  }
  return "?";
}

XSpec::XSpec(Graph g1, SizeablePartition p1, Graph g2, SizeablePartition p2, Graph g3,
             SizeablePartition p3)
    : gammas_{std::move(g1), std::move(g2), std::move(g3)},
      parts_{std::move(p1), std::move(p2), std::move(p3)} {
  for (int i = 0; i < 3; ++i) {
    auto rep = verify_sizeable(gammas_[i], parts_[i]);
    if (!rep.verdict)
      throw std::invalid_argument("input graph " + std::to_string(i + 1) +
                                  " is not sizeable: " + rep.to_json().dump());
  }
  for (int f = 0; f < 3; ++f) {
    const int ga = kFactorAGamma[f] - 1, gb = kFactorBGamma[f] - 1;
    const auto a_verts = gammas_[ga].vertices_with(Side::A);
    const auto b_verts = gammas_[gb].vertices_with(Side::B);
    a_map_[f].assign(gammas_[ga].vertex_count(), -1);
    b_map_[f].assign(gammas_[gb].vertex_count(), -1);
    Graph& k = factors_[f];
    for (int v : a_verts) {
      a_map_[f][v] = k.add_vertex({Side::A, parts_[ga].part(v), gammas_[ga].label(v).name});
      back_gamma_[f].push_back(ga);
      back_vertex_[f].push_back(v);
    }
    for (int v : b_verts) {
      b_map_[f][v] = k.add_vertex({Side::B, parts_[gb].part(v), gammas_[gb].label(v).name});
      back_gamma_[f].push_back(gb);
      back_vertex_[f].push_back(v);
    }
    const int na = static_cast<int>(a_verts.size());
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < static_cast<int>(b_verts.size()); ++j)
        k.add_edge(i, na + j);
  }
}

XSpec XSpec::from_tagged(Graph g1, Graph g2, Graph g3) {
  auto p1 = SizeablePartition::from_tags(g1);
  auto p2 = SizeablePartition::from_tags(g2);
  auto p3 = SizeablePartition::from_tags(g3);
  return XSpec(std::move(g1), std::move(p1), std::move(g2), std::move(p2), std::move(g3),
               std::move(p3));
}

int XSpec::factor_vertex_from_a(int f, int gamma_vertex) const {
  int fv = a_map_[f].at(gamma_vertex);
  if (fv < 0) throw std::invalid_argument("vertex is not on the A side of this factor");
  return fv;
}

int XSpec::factor_vertex_from_b(int f, int gamma_vertex) const {
  int fv = b_map_[f].at(gamma_vertex);
  if (fv < 0) throw std::invalid_argument("vertex is not on the B side of this factor");
  return fv;
}

bool XSpec::factor_vertex_is_a(int f, int fv) const { return factors_[f].side(fv) == Side::A; }
int XSpec::gamma_vertex_of(int f, int fv) const { return back_vertex_[f].at(fv); }
int XSpec::gamma_index_of(int f, int fv) const { return back_gamma_[f].at(fv) + 1; }

std::array<long long, 3> XSpec::sizes_a() const {
  std::array<long long, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = static_cast<long long>(gammas_[i].vertices_with(Side::A).size());
  return out;
}

std::array<long long, 3> XSpec::sizes_b() const {
  std::array<long long, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = static_cast<long long>(gammas_[i].vertices_with(Side::B).size());
  return out;
}

std::array<long long, 3> XSpec::sizes_e() const {
  std::array<long long, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = gammas_[i].edge_count();
  return out;
}

ProductComplex build_x(const XSpec& spec) {
  std::vector<std::array<int, 3>> verts;
  std::array<int, 3> na{}, nv{};
  for (int f = 0; f < 3; ++f) {
    na[f] = static_cast<int>(spec.factor(f).vertices_with(Side::A).size());
    nv[f] = spec.factor(f).vertex_count();
  }
  // all coordinates on the A side
  for (int i = 0; i < na[0]; ++i)
    for (int j = 0; j < na[1]; ++j)
      for (int k = 0; k < na[2]; ++k) verts.push_back({i, j, k});
  // all coordinates on the B side
  for (int i = na[0]; i < nv[0]; ++i)
    for (int j = na[1]; j < nv[1]; ++j)
      for (int k = na[2]; k < nv[2]; ++k) verts.push_back({i, j, k});
  // one defining edge, third coordinate free
  auto add_pair_class = [&](int gi, int fa, int fb, int ffree) {
    const Graph& gamma = spec.gamma(gi);
    for (const auto& [u, w] : gamma.edges()) {
      int au = gamma.side(u) == Side::A ? u : w;
      int bw = gamma.side(u) == Side::A ? w : u;
      int va = spec.factor_vertex_from_a(fa, au);
      int vb = spec.factor_vertex_from_b(fb, bw);
      for (int t = 0; t < nv[ffree]; ++t) {
        std::array<int, 3> v{};
        v[fa] = va;
        v[fb] = vb;
        v[ffree] = t;
        verts.push_back(v);
      }
    }
  };
  add_pair_class(1, 0, 1, 2);  // [v1,v2] in gamma1: v1 in A1 (factor 0), v2 in B1 (factor 1)
  add_pair_class(2, 1, 2, 0);  // [v2,v3] in gamma2
  add_pair_class(3, 2, 0, 1);  // [v3,v1] in gamma3

  ProductComplex x(spec.factor(0), spec.factor(1), spec.factor(2), std::move(verts));

  auto a = spec.sizes_a();
  auto b = spec.sizes_b();
  auto e = spec.sizes_e();
  long long expect = a[0] * a[1] * a[2] + b[0] * b[1] * b[2] + e[0] * (a[2] + b[1]) +
                     e[1] * (a[0] + b[2]) + e[2] * (a[1] + b[0]);
  if (static_cast<long long>(x.vertices().size()) != expect)
    throw std::logic_error("vertex census mismatch in build_x");
  return x;
}

namespace {

// Per-coordinate link expectation of one of the 8 side-pattern classes.
struct CoordExpectation {
  bool full = false;        // whole opposite side of the factor
  int nbr_gamma = 0;        // else: neighbours of base vertex in this gamma (1..3)
  int base_coord = 0;       // which coordinate of v the base vertex sits in
};

struct ClassRule {
  VertexType type;
  CoordExpectation coord[3];
  int span_gamma = 0;       // 0 for type 1; else gamma spanned across two coords
  int span_a_coord = 0, span_b_coord = 0;
};

// Indexed by the side pattern bits (bit f set when coordinate f is on A).
const ClassRule& rule_for_pattern(int pattern) {
  static const ClassRule rules[8] = {
      // BBB -> join of N(v2,G1), N(v3,G2), N(v1,G3)
      {VertexType::type1_b, {{false, 1, 1}, {false, 2, 2}, {false, 3, 0}}, 0, 0, 0},
      // ABB (A,B,B): type2-G1, N(v3,G2) at coord1, G3 spans (A3 at c2, B3 at c0)
      {VertexType::type2_g1, {{true, 0, 0}, {false, 2, 2}, {true, 0, 0}}, 3, 2, 0},
      // BAB (B,A,B): type2-G2, N(v1,G3) at coord2, G1 spans (A1 at c0, B1 at c1)
      {VertexType::type2_g2, {{true, 0, 0}, {true, 0, 0}, {false, 3, 0}}, 1, 0, 1},
      // AAB (A,A,B): type2-G2, N(v1,G1) at coord1, G3 spans (A3 at c2, B3 at c0)
      {VertexType::type2_g2, {{true, 0, 0}, {false, 1, 0}, {true, 0, 0}}, 3, 2, 0},
      // BBA (B,B,A): type2-G3, N(v2,G1) at coord0, G2 spans (A2 at c1, B2 at c2)
      {VertexType::type2_g3, {{false, 1, 1}, {true, 0, 0}, {true, 0, 0}}, 2, 1, 2},
      // ABA (A,B,A): type2-G1, N(v3,G3) at coord0, G2 spans (A2 at c1, B2 at c2)
      {VertexType::type2_g1, {{false, 3, 2}, {true, 0, 0}, {true, 0, 0}}, 2, 1, 2},
      // BAA (B,A,A): type2-G3, N(v2,G2) at coord2, G1 spans (A1 at c0, B1 at c1)
      {VertexType::type2_g3, {{true, 0, 0}, {true, 0, 0}, {false, 2, 1}}, 1, 0, 1},
      // AAA -> join of N(v3,G3), N(v1,G1), N(v2,G2)
      {VertexType::type1_a, {{false, 3, 2}, {false, 1, 0}, {false, 2, 1}}, 0, 0, 0},
  };
  return rules[pattern];
}

int pattern_of(const XSpec& spec, const std::array<int, 3>& v) {
  int p = 0;
  for (int f = 0; f < 3; ++f)
    if (spec.factor_vertex_is_a(f, v[f])) p |= 1 << f;
  return p;
}

// Neighbours of gamma vertex `gv` in `gamma`, translated to vertices of
// factor `f` (automatically landing on the side opposite to v's).
std::vector<int> expected_nbr_set(const XSpec& spec, int gamma, int gv, int f) {
  std::vector<int> out;
  const Graph& g = spec.gamma(gamma);
  for (int w : g.neighbors(gv)) {
    if (g.side(w) == Side::A)
      out.push_back(spec.factor_vertex_from_a(f, w));
    else
      out.push_back(spec.factor_vertex_from_b(f, w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> full_side_set(const XSpec& spec, int f, bool opposite_of_a) {
  auto verts = spec.factor(f).vertices_with(opposite_of_a ? Side::B : Side::A);
  std::sort(verts.begin(), verts.end());
  return verts;
}

}  // namespace

VertexType classify_vertex(const XSpec& spec, const std::array<int, 3>& v) {
  for (int f = 0; f < 3; ++f)
    if (v[f] < 0 || v[f] >= spec.factor(f).vertex_count())
      throw std::invalid_argument("coordinate out of range");
  const int pattern = pattern_of(spec, v);
  const ClassRule& rule = rule_for_pattern(pattern);
  auto has_gamma_edge = [&](int gi, int f_a, int f_b) {
    const Graph& g = spec.gamma(gi);
    int u = spec.gamma_vertex_of(f_a, v[f_a]);
    int w = spec.gamma_vertex_of(f_b, v[f_b]);
    for (int nb : g.neighbors(u))
      if (nb == w) return true;
    return false;
  };
  bool in_x = false;
  switch (rule.type) {
    case VertexType::type1_a:
    case VertexType::type1_b: in_x = true; break;
    case VertexType::type2_g1: in_x = has_gamma_edge(1, 0, 1); break;
    case VertexType::type2_g2: in_x = has_gamma_edge(2, 1, 2); break;
    case VertexType::type2_g3: in_x = has_gamma_edge(3, 2, 0); break;
  }
  if (!in_x) throw std::invalid_argument("vertex triple is not in X");
  return rule.type;
}

json LinkTableReport::to_json() const {
  json rows_json = json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"class", to_string(r.type)},
                         {"pattern", {r.coord_in_a[0] ? "A" : "B", r.coord_in_a[1] ? "A" : "B",
                                      r.coord_in_a[2] ? "A" : "B"}},
                         {"vertices", r.vertex_count},
                         {"link_cells", {r.cells0, r.cells1, r.cells2}}});
  json j{{"ok", ok}, {"classes", rows_json}};
  if (!ok) {
    j["first_mismatch"] = *first_mismatch;
    j["reason"] = mismatch_reason;
  }
  return j;
}

LinkTableReport verify_link_table(const XSpec& spec, const ProductComplex& x, int threads) {
  LinkTableReport rep;
  const auto& verts = x.vertices();
  const long long n = static_cast<long long>(verts.size());
  struct PerVertex {
    int pattern = 0;
    long long c0 = 0, c1 = 0, c2 = 0;
    bool ok = true;
    std::string reason;
  };
  std::vector<PerVertex> results(n);

  parallel_for(n, threads, [&](long long i) {
    const auto& v = verts[i];
    PerVertex& out = results[i];
    out.pattern = pattern_of(spec, v);
    const ClassRule& rule = rule_for_pattern(out.pattern);
    LinkComplex lk = x.vertex_link(v);
    try {
      lk.validate();
    } catch (const std::exception& ex) {
      out.ok = false;
      out.reason = std::string("link not simplicial: ") + ex.what();
      return;
    }
    out.c0 = lk.count(0);
    out.c1 = lk.count(1);
    out.c2 = lk.count(2);

    // expected vertex set per coordinate
    std::array<std::vector<int>, 3> expect;
    for (int f = 0; f < 3; ++f) {
      const auto& ce = rule.coord[f];
      if (ce.full)
        expect[f] = full_side_set(spec, f, spec.factor_vertex_is_a(f, v[f]));
      else
        expect[f] = expected_nbr_set(spec, ce.nbr_gamma,
                                     spec.gamma_vertex_of(ce.base_coord, v[ce.base_coord]), f);
    }
    std::array<std::vector<int>, 3> got;
    for (const auto& lv : lk.verts) got[lv.coord].push_back(lv.other);
    for (int f = 0; f < 3; ++f) {
      std::sort(got[f].begin(), got[f].end());
      if (got[f] != expect[f]) {
        out.ok = false;
        out.reason = "link vertex set mismatch in coordinate " + std::to_string(f + 1);
        return;
      }
    }

    // expected edges: gamma edges across the spanned pair, all pairs elsewhere
    auto expected_cross = [&](int f1, int f2) -> long long {
      if (rule.span_gamma != 0 &&
          ((f1 == rule.span_a_coord && f2 == rule.span_b_coord) ||
           (f2 == rule.span_a_coord && f1 == rule.span_b_coord)))
        return spec.gamma(rule.span_gamma).edge_count();
      return static_cast<long long>(expect[f1].size()) * static_cast<long long>(expect[f2].size());
    };
    long long want_edges = expected_cross(0, 1) + expected_cross(0, 2) + expected_cross(1, 2);
    if (static_cast<long long>(lk.edges.size()) != want_edges) {
      out.ok = false;
      out.reason = "link edge count mismatch";
      return;
    }
    if (rule.span_gamma != 0) {
      // check the spanned pair is exactly the gamma edge set
      const Graph& g = spec.gamma(rule.span_gamma);
      std::vector<std::pair<int, int>> want;
      for (const auto& [u, w] : g.edges()) {
        int au = g.side(u) == Side::A ? u : w;
        int bw = g.side(u) == Side::A ? w : u;
        want.emplace_back(spec.factor_vertex_from_a(rule.span_a_coord, au),
                          spec.factor_vertex_from_b(rule.span_b_coord, bw));
      }
      std::sort(want.begin(), want.end());
      std::vector<std::pair<int, int>> got_pairs;
      for (const auto& [p, q] : lk.edges) {
        const auto &lp = lk.verts[p], &lq = lk.verts[q];
        if ((lp.coord == rule.span_a_coord && lq.coord == rule.span_b_coord))
          got_pairs.emplace_back(lp.other, lq.other);
        else if (lq.coord == rule.span_a_coord && lp.coord == rule.span_b_coord)
          got_pairs.emplace_back(lq.other, lp.other);
      }
      std::sort(got_pairs.begin(), got_pairs.end());
      if (got_pairs != want) {
        out.ok = false;
        out.reason = "spanned gamma edge set mismatch";
        return;
      }
    }

    long long want_tris;
    if (rule.span_gamma == 0)
      want_tris = static_cast<long long>(expect[0].size()) * expect[1].size() * expect[2].size();
    else {
      int free_coord = 3 - rule.span_a_coord - rule.span_b_coord;
      want_tris = static_cast<long long>(expect[free_coord].size()) *
                  spec.gamma(rule.span_gamma).edge_count();
    }
    if (static_cast<long long>(lk.triangles.size()) != want_tris) {
      out.ok = false;
      out.reason = "link triangle count mismatch";
    }
  });

  std::array<LinkTableRow, 8> rows{};
  for (int p = 0; p < 8; ++p) {
    rows[p].type = rule_for_pattern(p).type;
    for (int f = 0; f < 3; ++f) rows[p].coord_in_a[f] = p >> f & 1;
  }
  for (long long i = 0; i < n; ++i) {
    const auto& r = results[i];
    rows[r.pattern].vertex_count++;
    rows[r.pattern].cells0 += r.c0;
    rows[r.pattern].cells1 += r.c1;
    rows[r.pattern].cells2 += r.c2;
    if (!r.ok && rep.ok) {
      rep.ok = false;
      rep.first_mismatch = verts[i];
      rep.mismatch_reason = r.reason;
    }
  }
  rep.rows.assign(rows.begin(), rows.end());
  return rep;
}

json GammaEdgeReport::to_json() const {
  json j{{"ok", ok},
         {"gamma_edges", gamma_edges},
         {"bipartite_edges", bipartite_edges},
         {"per_gamma", per_gamma},
         {"min_gamma_girth", min_gamma_girth}};
  if (!ok) {
    j["first_failure"] = first_failure->to_json();
    j["reason"] = failure_reason;
  }
  return j;
}

GammaEdgeReport gamma_edge_certificate(const XSpec& spec, const ProductComplex& x, int threads) {
  GammaEdgeReport rep;
  rep.min_gamma_girth = 0;

  // gamma edge sets keyed by (A-side coord vertex, B-side coord vertex)
  struct GammaRef {
    int a_coord, b_coord;
    std::vector<std::pair<int, int>> edges;  // factor-vertex pairs, sorted
    std::vector<int> all_a, all_b;           // full factor sides, sorted
  };
  std::array<GammaRef, 3> grefs;
  const int gamma_a_coord[3] = {0, 1, 2};  // gamma i+1 spans A side at this coord
  const int gamma_b_coord[3] = {1, 2, 0};
  for (int g = 0; g < 3; ++g) {
    GammaRef& ref = grefs[g];
    ref.a_coord = gamma_a_coord[g];
    ref.b_coord = gamma_b_coord[g];
    const Graph& gamma = spec.gamma(g + 1);
    for (const auto& [u, w] : gamma.edges()) {
      int au = gamma.side(u) == Side::A ? u : w;
      int bw = gamma.side(u) == Side::A ? w : u;
      ref.edges.emplace_back(spec.factor_vertex_from_a(ref.a_coord, au),
                             spec.factor_vertex_from_b(ref.b_coord, bw));
    }
    std::sort(ref.edges.begin(), ref.edges.end());
    ref.all_a = full_side_set(spec, ref.a_coord, false);
    ref.all_b = full_side_set(spec, ref.b_coord, true);
  }

  enum class Kind { bipartite, gamma, bad };
  struct EdgeResult {
    long long bip = 0;
    std::array<long long, 3> gam{};
    int min_girth = 0;  // 0 = none seen
    std::optional<CellTriple> failure;
    std::string reason;
  };

  for (int k = 0; k < 3 && rep.ok; ++k) {
    const Graph& fk = spec.factor(k);
    const long long ne = fk.edge_count();
    std::vector<EdgeResult> partial(ne);
    parallel_for(ne, threads, [&](long long ei) {
      EdgeResult& out = partial[ei];
      // iterate over X vertices with this factor edge: cheaper to scan verts
      const auto& [p, r] = fk.edge(static_cast<int>(ei));
      for (const auto& v : x.vertices()) {
        if (v[k] != p) continue;
        std::array<int, 3> w = v;
        w[k] = r;
        if (!x.has_vertex(w)) continue;
        CellTriple e;
        for (int f = 0; f < 3; ++f) e.c[f] = {false, v[f]};
        e.c[k] = {true, static_cast<int>(ei)};
        EdgeLink el = x.edge_link(e);

        // try: complete bipartite between the two free coordinates
        std::array<std::vector<int>, 3> others;
        for (const auto& sq : el.squares) others[sq.coord].push_back(sq.other);
        long long cross = 1;
        for (int f = 0; f < 3; ++f)
          if (f != k) cross *= static_cast<long long>(others[f].size());
        if (el.graph.edge_count() == cross) {
          ++out.bip;
          continue;
        }
        // try: one of the gammas
        bool matched = false;
        for (int g = 0; g < 3 && !matched; ++g) {
          const GammaRef& ref = grefs[g];
          if (ref.a_coord == k || ref.b_coord == k) continue;
          auto sa = others[ref.a_coord];
          auto sb = others[ref.b_coord];
          std::sort(sa.begin(), sa.end());
          std::sort(sb.begin(), sb.end());
          if (sa != ref.all_a || sb != ref.all_b) continue;
          std::vector<std::pair<int, int>> got;
          for (const auto& [q1, q2] : el.graph.edges()) {
            const auto &s1 = el.squares[q1], &s2 = el.squares[q2];
            if (s1.coord == ref.a_coord)
              got.emplace_back(s1.other, s2.other);
            else
              got.emplace_back(s2.other, s1.other);
          }
          std::sort(got.begin(), got.end());
          if (got != ref.edges) continue;
          matched = true;
          ++out.gam[g];
          auto girth = el.graph.girth();
          int gv = girth ? *girth : 1 << 20;
          if (out.min_girth == 0 || gv < out.min_girth) out.min_girth = gv;
          if (gv < 6 && !out.failure) {
            out.failure = e;
            out.reason = "gamma edge link girth " + std::to_string(gv) + " < 6";
          }
        }
        if (!matched && !out.failure) {
          out.failure = e;
          out.reason = "edge link neither complete bipartite nor a defining graph";
        }
      }
    });
    for (const auto& pr : partial) {
      rep.bipartite_edges += pr.bip;
      for (int g = 0; g < 3; ++g) {
        rep.gamma_edges += pr.gam[g];
        rep.per_gamma[g] += pr.gam[g];
      }
      if (pr.min_girth != 0 && (rep.min_gamma_girth == 0 || pr.min_girth < rep.min_gamma_girth))
        rep.min_gamma_girth = pr.min_girth;
      if (pr.failure && rep.ok) {
        rep.ok = false;
        rep.first_failure = pr.failure;
        rep.failure_reason = pr.reason;
      }
    }
  }
  return rep;
}

long long euler_formula_x(const std::array<long long, 3>& a, const std::array<long long, 3>& b,
                          const std::array<long long, 3>& e) {
  const long long a1 = a[0], a2 = a[1], a3 = a[2];
  const long long b1 = b[0], b2 = b[1], b3 = b[2];
  const long long e1 = e[0], e2 = e[1], e3 = e[2];
  return a1 * a2 * a3 + b1 * b2 * b3 + a1 * e2 + a3 * e1 + a2 * e3 + b2 * e1 + b3 * e2 + b1 * e3 +
         e1 * e2 * a3 + e1 * a2 * e3 + a1 * e2 * e3 + e1 * e2 * b3 + e1 * b2 * e3 + b1 * e2 * e3 -
         a1 * a2 * e3 - a1 * e2 * a3 - e1 * a2 * a3 - b1 * b2 * e3 - b1 * e2 * b3 - e1 * b2 * b3 -
         e1 * e2 - e2 * e3 - e1 * e3 - a1 * e2 * b3 - e1 * b2 * a3 - b1 * a2 * e3 - e1 * e2 * e3;
}

}  // namespace cubforge
