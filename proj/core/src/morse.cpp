#include "cubforge/morse.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cubforge/parallel.hpp"

namespace cubforge {

using nlohmann::json;

int EdgeOrientation::out_degree(const Graph& g, int v) const {
  int d = 0;
  for (const auto& ie : g.incident(v))
    if (tail(g, ie.edge) == v) ++d;
  return d;
}

int EdgeOrientation::in_degree(const Graph& g, int v) const {
  int d = 0;
  for (const auto& ie : g.incident(v))
    if (head(g, ie.edge) == v) ++d;
  return d;
}

EdgeOrientation orient_k_graph(const Graph& k) {
  EdgeOrientation o;
  o.forward.resize(k.edge_count());
  for (int e = 0; e < k.edge_count(); ++e) {
    auto [u, v] = k.edge(e);
    if (k.side(u) != Side::A) std::swap(u, v);
    if (k.side(u) != Side::A || k.side(v) != Side::B)
      throw std::invalid_argument("factor edge does not join side A to side B");
    if (k.part(u) == kNoPart || k.part(v) == kNoPart)
      throw std::invalid_argument("factor vertex missing its part tag");
    bool a_to_b = k.part(u) == k.part(v);
    bool stored_a_first = k.edge(e).first == u;
    o.forward[e] = a_to_b == stored_a_first;
  }
  return o;
}

std::array<EdgeOrientation, 3> orient_k(const XSpec& spec) {
  return {orient_k_graph(spec.factor(0)), orient_k_graph(spec.factor(1)),
          orient_k_graph(spec.factor(2))};
}

EdgeOrientation orient_two_full(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 4)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has valence " +
                                  std::to_string(g.degree(v)) + " < 4");
  const int m = g.edge_count();
  EdgeOrientation o;
  o.forward.assign(m, 0);

  // adjacency with room for dummy edges appended past the real ids
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());  // (edge, to)
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    adj[u].emplace_back(e, v);
    adj[v].emplace_back(e, u);
  }

  std::vector<int> comp(g.vertex_count(), -1);
  int ncomp = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [e, w] : adj[u])
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }

  // pair odd vertices inside their component with dummy edges
  int next_edge = m;
  std::vector<std::vector<int>> odd(ncomp);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2) odd[comp[v]].push_back(v);
  for (const auto& vs : odd)
    for (std::size_t i = 0; i + 1 < vs.size(); i += 2) {
      adj[vs[i]].emplace_back(next_edge, vs[i + 1]);
      adj[vs[i + 1]].emplace_back(next_edge, vs[i]);
      ++next_edge;
    }

  // Hierholzer per component; orient real edges along the circuit
  std::vector<char> used(next_edge, 0);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<char> comp_done(ncomp, 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp_done[comp[s]]) continue;
    comp_done[comp[s]] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      if (cursor[u] < adj[u].size()) {
        auto [e, w] = adj[u][cursor[u]++];
        if (used[e]) continue;
        used[e] = 1;
        if (e < m) o.forward[e] = g.edge(e).first == u;
        stack.push_back(w);
      } else {
        stack.pop_back();
      }
    }
  }
  if (!two_full_orientation_ok(g, o))
    throw std::logic_error("eulerian orientation missed the in/out >= 2 bound");
  return o;
}

bool two_full_orientation_ok(const Graph& g, const EdgeOrientation& o) {
  if (static_cast<int>(o.forward.size()) != g.edge_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (o.in_degree(g, v) < 2 || o.out_degree(g, v) < 2) return false;
  return true;
}

namespace {

LinkComplex directed_link(const ProductComplex& x, const std::array<EdgeOrientation, 3>& o,
                          const std::array<int, 3>& v, bool away) {
  if (!x.has_vertex(v)) throw std::invalid_argument("vertex is not in the complex");
  LinkComplex lk = x.vertex_link(v);
  std::vector<char> keep(lk.verts.size());
  for (std::size_t i = 0; i < lk.verts.size(); ++i) {
    const auto& lv = lk.verts[i];
    bool points_away = o[lv.coord].points_away_from(x.factor(lv.coord), lv.edge, v[lv.coord]);
    keep[i] = points_away == away;
  }
  return lk.restrict_to(keep);
}

}  // namespace

LinkComplex ascending_link(const ProductComplex& x, const std::array<EdgeOrientation, 3>& o,
                           const std::array<int, 3>& v) {
  return directed_link(x, o, v, true);
}

LinkComplex descending_link(const ProductComplex& x, const std::array<EdgeOrientation, 3>& o,
                            const std::array<int, 3>& v) {
  return directed_link(x, o, v, false);
}

namespace {

// Structure-exact key: complexes with equal keys have identical boundary
// matrices, so cached homology is sound.
std::string structure_key(const LinkComplex& l) {
  std::string s;
  auto push = [&s](long long x) { s.append(reinterpret_cast<const char*>(&x), sizeof x); };
  push(static_cast<long long>(l.verts.size()));
  push(static_cast<long long>(l.edges.size()));
  for (const auto& [i, j] : l.edges) {
    push(i);
    push(j);
  }
  push(static_cast<long long>(l.triangles.size()));
  for (const auto& t : l.triangles) {
    push(t[0]);
    push(t[1]);
    push(t[2]);
  }
  return s;
}

bool h2_nonzero(const HomologyProfile& p) { return p.rank[2] != 0 || !p.torsion[2].empty(); }

bool h01_zero(const HomologyProfile& p) {
  return !p.empty && p.rank[0] == 0 && p.rank[1] == 0 && p.torsion[0].empty() &&
         p.torsion[1].empty();
}

}  // namespace

json NotF3Report::to_json() const {
  json classes_json = json::array();
  for (const auto& r : classes)
    classes_json.push_back({{"class", to_string(r.type)},
                            {"pattern", {r.coord_in_a[0] ? "A" : "B", r.coord_in_a[1] ? "A" : "B",
                                         r.coord_in_a[2] ? "A" : "B"}},
                            {"vertices", r.vertices},
                            {"asc_h2_nonzero", r.asc_h2_nonzero},
                            {"desc_h2_nonzero", r.desc_h2_nonzero},
                            {"all_trivial", r.all_trivial}});
  json j{{"ok", ok},
         {"h01_all_zero", h01_all_zero},
         {"dimension_le_2", dimension_le_2},
         {"vertices_checked", vertices_checked},
         {"h2_witnesses", h2_witnesses},
         {"type2_all_trivial", type2_all_trivial},
         {"classes", classes_json},
         {"connectivity_note", connectivity_note}};
  if (witness) {
    j["witness"] = *witness;
    j["witness_asc"] = witness_asc.to_json();
    j["witness_desc"] = witness_desc.to_json();
  }
  if (failure) {
    j["failure"] = *failure;
    j["failure_reason"] = failure_reason;
  }
  if (!evidence.empty()) {
    json ev = json::array();
    for (const auto& e : evidence)
      ev.push_back({{"vertex", e.v},
                    {"class", to_string(e.type)},
                    {"asc", e.asc.to_json()},
                    {"desc", e.desc.to_json()}});
    j["evidence"] = ev;
  }
  return j;
}

NotF3Report not_f3_certificate(const XSpec& spec, const ProductComplex& x, int threads,
                               bool per_vertex_evidence) {
  NotF3Report rep;
  rep.connectivity_note =
      "type 2 ascending/descending links are a non-empty discrete set joined with a "
      "connected part-selected subgraph; simple connectivity follows from that join "
      "structure and is recorded here, not recomputed";

  const auto orient = orient_k(spec);
  const auto& verts = x.vertices();
  const long long n = static_cast<long long>(verts.size());
  rep.vertices_checked = n;

  struct PerVertex {
    int pattern = 0;
    VertexType type{};
    HomologyProfile asc, desc;
  };
  std::vector<PerVertex> results(n);

  std::map<std::string, HomologyProfile> cache;
  std::mutex cache_mu;
  auto homology_of = [&](const LinkComplex& l) {
    std::string key = structure_key(l);
    {
      std::lock_guard<std::mutex> lk(cache_mu);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    HomologyProfile p = reduced_homology(l);
    std::lock_guard<std::mutex> lk(cache_mu);
    cache.emplace(std::move(key), p);
    return p;
  };

  parallel_for(n, threads, [&](long long i) {
    const auto& v = verts[i];
    PerVertex& out = results[i];
    out.pattern = 0;
    for (int f = 0; f < 3; ++f)
      if (spec.factor_vertex_is_a(f, v[f])) out.pattern |= 1 << f;
    out.type = classify_vertex(spec, v);
    out.asc = homology_of(ascending_link(x, orient, v));
    out.desc = homology_of(descending_link(x, orient, v));
  });

  std::array<NotF3ClassRow, 8> rows{};
  std::array<bool, 8> row_seen{};
  rep.h01_all_zero = true;
  for (long long i = 0; i < n; ++i) {
    const auto& r = results[i];
    NotF3ClassRow& row = rows[r.pattern];
    if (!row_seen[r.pattern]) {
      row.type = r.type;
      for (int f = 0; f < 3; ++f) row.coord_in_a[f] = r.pattern >> f & 1;
      row_seen[r.pattern] = true;
    }
    row.vertices++;
    bool type2 = r.type != VertexType::type1_a && r.type != VertexType::type1_b;
    for (int dir = 0; dir < 2; ++dir) {
      const HomologyProfile& p = dir ? r.desc : r.asc;
      if (!h01_zero(p)) {
        rep.h01_all_zero = false;
        if (!rep.failure) {
          rep.failure = verts[i];
          rep.failure_reason = std::string(dir ? "descending" : "ascending") +
                               " link has nonvanishing reduced H0 or H1";
        }
      }
      if (h2_nonzero(p)) (dir ? row.desc_h2_nonzero : row.asc_h2_nonzero)++;
      if (!p.trivial()) row.all_trivial = false;
    }
    if (h2_nonzero(r.asc) || h2_nonzero(r.desc)) {
      if (rep.h2_witnesses == 0) {
        rep.witness = verts[i];
        rep.witness_asc = r.asc;
        rep.witness_desc = r.desc;
      }
      rep.h2_witnesses++;
    }
    if (type2 && !(r.asc.trivial() && r.desc.trivial())) rep.type2_all_trivial = false;
  }
  for (int p = 0; p < 8; ++p)
    if (row_seen[p]) rep.classes.push_back(rows[p]);

  if (per_vertex_evidence) {
    rep.evidence.reserve(n);
    for (long long i = 0; i < n; ++i)
      rep.evidence.push_back({verts[i], results[i].type, results[i].asc, results[i].desc});
  }

  rep.dimension_le_2 = true;  // links of a 3-dimensional cube complex
  rep.ok = rep.h01_all_zero && rep.h2_witnesses > 0 && rep.dimension_le_2;
  return rep;
}

}  // namespace cubforge
