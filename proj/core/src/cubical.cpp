#include "cubforge/cubical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cubforge/parallel.hpp"

namespace cubforge {

using nlohmann::json;

json CellTriple::to_json() const {
  json out = json::array();
  for (const auto& cell : c)
    out.push_back(json::array({cell.is_edge ? "e" : "v", cell.id}));
  return out;
}

CellTriple CellTriple::from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("cell triple must have 3 coordinates");
  CellTriple t;
  for (int i = 0; i < 3; ++i) {
    std::string kind = j[i].at(0).get<std::string>();
    if (kind != "v" && kind != "e") throw std::invalid_argument("cell kind must be 'v' or 'e'");
    t.c[i] = {kind == "e", j[i].at(1).get<int>()};
  }
  return t;
}

long long LinkComplex::count(int dim) const {
  switch (dim) {
    case 0: return static_cast<long long>(verts.size());
    case 1: return static_cast<long long>(edges.size());
    case 2: return static_cast<long long>(triangles.size());
    default: return 0;
  }
}

void LinkComplex::validate() const {
  const int n = static_cast<int>(verts.size());
  {
    auto sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate link vertex");
  }
  auto es = edges;
  for (auto& [u, v] : es) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("bad link edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw std::invalid_argument("duplicate link edge");
  auto has_edge = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return std::binary_search(es.begin(), es.end(), std::make_pair(u, v));
  };
  auto ts = triangles;
  for (auto& t : ts) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= n || t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("bad link triangle");
    if (!has_edge(t[0], t[1]) || !has_edge(t[0], t[2]) || !has_edge(t[1], t[2]))
      throw std::invalid_argument("triangle with a missing edge");
  }
  std::sort(ts.begin(), ts.end());
  if (std::adjacent_find(ts.begin(), ts.end()) != ts.end())
    throw std::invalid_argument("duplicate link triangle");
}

LinkComplex LinkComplex::restrict_to(const std::vector<char>& keep) const {
  LinkComplex out;
  std::vector<int> remap(verts.size(), -1);
  for (size_t i = 0; i < verts.size(); ++i)
    if (keep[i]) {
      remap[i] = static_cast<int>(out.verts.size());
      out.verts.push_back(verts[i]);
    }
  for (const auto& [u, v] : edges)
    if (keep[u] && keep[v]) out.edges.emplace_back(remap[u], remap[v]);
  for (const auto& t : triangles)
    if (keep[t[0]] && keep[t[1]] && keep[t[2]])
      out.triangles.push_back({remap[t[0]], remap[t[1]], remap[t[2]]});
  return out;
}

bool link_connected(const LinkComplex& l) {
  const int n = static_cast<int>(l.verts.size());
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : l.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

FlagResult is_flag(const LinkComplex& l) {
  l.validate();
  const int n = static_cast<int>(l.verts.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : l.edges) adj[u][v] = adj[v][u] = 1;
  std::vector<std::uint64_t> tri_keys;
  tri_keys.reserve(l.triangles.size());
  auto key = [](int a, int b, int c) {
    return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
  };
  for (auto t : l.triangles) {
    std::sort(t.begin(), t.end());
    tri_keys.push_back(key(t[0], t[1], t[2]));
  }
  std::sort(tri_keys.begin(), tri_keys.end());
  for (const auto& [eu, ev] : l.edges) {
    const int lo = std::min(eu, ev), hi = std::max(eu, ev);
    for (int w = hi + 1; w < n; ++w)
      if (adj[lo][w] && adj[hi][w] &&
          !std::binary_search(tri_keys.begin(), tri_keys.end(), key(lo, hi, w)))
        return {false, {lo, hi, w}};
  }
  return {};
}

ProductComplex::ProductComplex(Graph f1, Graph f2, Graph f3, std::vector<std::array<int, 3>> verts)
    : factors_{std::move(f1), std::move(f2), std::move(f3)} {
  for (int i = 0; i < 3; ++i) n_[i] = factors_[i].vertex_count();
  for (const auto& v : verts)
    for (int i = 0; i < 3; ++i)
      if (v[i] < 0 || v[i] >= n_[i])
        throw std::invalid_argument("vertex triple out of range in coordinate " + std::to_string(i + 1));
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  verts_ = std::move(verts);
  std::size_t total = static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  present_.assign((total + 63) / 64, 0);
  for (const auto& v : verts_) {
    std::size_t idx = pack(v[0], v[1], v[2]);
    present_[idx >> 6] |= 1ULL << (idx & 63);
  }
}

ProductComplex ProductComplex::full_product(Graph f1, Graph f2, Graph f3) {
  std::vector<std::array<int, 3>> verts;
  verts.reserve(static_cast<std::size_t>(f1.vertex_count()) * f2.vertex_count() * f3.vertex_count());
  for (int u = 0; u < f1.vertex_count(); ++u)
    for (int v = 0; v < f2.vertex_count(); ++v)
      for (int w = 0; w < f3.vertex_count(); ++w) verts.push_back({u, v, w});
  return ProductComplex(std::move(f1), std::move(f2), std::move(f3), std::move(verts));
}

bool ProductComplex::has_vertex(int u1, int u2, int u3) const {
  std::size_t idx = pack(u1, u2, u3);
  return present_[idx >> 6] >> (idx & 63) & 1;
}

bool ProductComplex::has_cell(const CellTriple& t) const {
  std::array<std::array<int, 2>, 3> ends;
  std::array<int, 3> deg{};
  for (int i = 0; i < 3; ++i) {
    if (t.c[i].is_edge) {
      if (t.c[i].id < 0 || t.c[i].id >= factors_[i].edge_count()) return false;
      const auto& [a, b] = factors_[i].edge(t.c[i].id);
      ends[i] = {a, b};
      deg[i] = 2;
    } else {
      if (t.c[i].id < 0 || t.c[i].id >= n_[i]) return false;
      ends[i] = {t.c[i].id, t.c[i].id};
      deg[i] = 1;
    }
  }
  for (int x = 0; x < deg[0]; ++x)
    for (int y = 0; y < deg[1]; ++y)
      for (int z = 0; z < deg[2]; ++z)
        if (!has_vertex(ends[0][x], ends[1][y], ends[2][z])) return false;
  return true;
}

long long ProductComplex::count_cells(int dim, int threads) const {
  if (dim < 0 || dim > 3) return 0;
  if (dim == 0) return static_cast<long long>(verts_.size());
  long long total = 0;
  for (int mask = 1; mask < 8; ++mask) {
    if (__builtin_popcount(mask) != dim) continue;
    const long long first = (mask & 1) ? factors_[0].edge_count() : n_[0];
    const long long second = (mask & 2) ? factors_[1].edge_count() : n_[1];
    const long long third = (mask & 4) ? factors_[2].edge_count() : n_[2];
    std::vector<long long> partial(static_cast<std::size_t>(first), 0);
    parallel_for(first, threads, [&](long long i) {
      CellTriple t;
      t.c[0] = {bool(mask & 1), static_cast<int>(i)};
      long long local = 0;
      for (long long j = 0; j < second; ++j) {
        t.c[1] = {bool(mask & 2), static_cast<int>(j)};
        for (long long k = 0; k < third; ++k) {
          t.c[2] = {bool(mask & 4), static_cast<int>(k)};
          if (has_cell(t)) ++local;
        }
      }
      partial[i] = local;
    });
    for (long long x : partial) total += x;
  }
  return total;
}

std::vector<CellTriple> ProductComplex::cells(int dim) const {
  std::vector<CellTriple> out;
  if (dim == 0) {
    for (const auto& v : verts_)
      out.push_back({{Cell{false, v[0]}, Cell{false, v[1]}, Cell{false, v[2]}}});
    return out;
  }
  for (int mask = 1; mask < 8; ++mask) {
    if (__builtin_popcount(mask) != dim) continue;
    const int first = (mask & 1) ? factors_[0].edge_count() : n_[0];
    const int second = (mask & 2) ? factors_[1].edge_count() : n_[1];
    const int third = (mask & 4) ? factors_[2].edge_count() : n_[2];
    CellTriple t;
    for (int i = 0; i < first; ++i) {
      t.c[0] = {bool(mask & 1), i};
      for (int j = 0; j < second; ++j) {
        t.c[1] = {bool(mask & 2), j};
        for (int k = 0; k < third; ++k) {
          t.c[2] = {bool(mask & 4), k};
          if (has_cell(t)) out.push_back(t);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long ProductComplex::euler_direct(int threads) const {
  long long chi = 0;
  for (int d = 0; d <= 3; ++d) {
    long long c = count_cells(d, threads);
    chi += (d % 2 == 0) ? c : -c;
  }
  return chi;
}

LinkComplex ProductComplex::vertex_link(const std::array<int, 3>& v) const {
  if (!has_vertex(v[0], v[1], v[2]))
    throw std::invalid_argument("vertex triple not in the complex");
  LinkComplex l;
  for (int coord = 0; coord < 3; ++coord) {
    for (const auto& ie : factors_[coord].incident(v[coord])) {
      std::array<int, 3> w = v;
      w[coord] = ie.to;
      if (has_vertex(w[0], w[1], w[2])) l.verts.push_back({coord, ie.edge, ie.to});
    }
  }
  std::sort(l.verts.begin(), l.verts.end());
  const int n = static_cast<int>(l.verts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (l.verts[i].coord == l.verts[j].coord) continue;
      std::array<int, 3> w = v;
      w[l.verts[i].coord] = l.verts[i].other;
      w[l.verts[j].coord] = l.verts[j].other;
      if (has_vertex(w[0], w[1], w[2])) l.edges.emplace_back(i, j);
    }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : l.edges) adj[a][b] = adj[b][a] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!adj[i][k] || !adj[j][k]) continue;
        if (l.verts[i].coord == l.verts[k].coord || l.verts[j].coord == l.verts[k].coord) continue;
        std::array<int, 3> w = v;
        w[l.verts[i].coord] = l.verts[i].other;
        w[l.verts[j].coord] = l.verts[j].other;
        w[l.verts[k].coord] = l.verts[k].other;
        if (has_vertex(w[0], w[1], w[2])) l.triangles.push_back({i, j, k});
      }
    }
  return l;
}

EdgeLink ProductComplex::edge_link(const CellTriple& e) const {
  if (e.dim() != 1) throw std::invalid_argument("edge_link takes a 1-cube");
  if (!has_cell(e)) throw std::invalid_argument("edge not in the complex");
  int k = 0;
  while (!e.c[k].is_edge) ++k;
  const auto& [p, r] = factors_[k].edge(e.c[k].id);
  std::array<int, 3> base{};
  for (int i = 0; i < 3; ++i) base[i] = e.c[i].is_edge ? 0 : e.c[i].id;

  EdgeLink out;
  std::vector<int> free_coords;
  for (int i = 0; i < 3; ++i)
    if (i != k) free_coords.push_back(i);

  for (int fc : free_coords) {
    for (const auto& ie : factors_[fc].incident(base[fc])) {
      std::array<int, 3> w = base;
      w[fc] = ie.to;
      w[k] = p;
      bool ok = has_vertex(w[0], w[1], w[2]);
      w[k] = r;
      ok = ok && has_vertex(w[0], w[1], w[2]);
      if (ok) {
        Side side = fc == free_coords[0] ? Side::A : Side::B;
        out.graph.add_vertex({side, kNoPart,
                              "k" + std::to_string(fc + 1) + "/e" + std::to_string(ie.edge)});
        out.squares.push_back({fc, ie.edge, ie.to});
      }
    }
  }
  const int n = static_cast<int>(out.squares.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (out.squares[i].coord == out.squares[j].coord) continue;
      std::array<int, 3> w = base;
      w[out.squares[i].coord] = out.squares[i].other;
      w[out.squares[j].coord] = out.squares[j].other;
      w[k] = p;
      bool ok = has_vertex(w[0], w[1], w[2]);
      w[k] = r;
      ok = ok && has_vertex(w[0], w[1], w[2]);
      if (ok) out.graph.add_edge(i, j);
    }
  return out;
}

bool ProductComplex::faces_closed() const {
  for (int dim = 1; dim <= 3; ++dim)
    for (const auto& cell : cells(dim))
      for (int i = 0; i < 3; ++i) {
        if (!cell.c[i].is_edge) continue;
        const auto& [a, b] = factors_[i].edge(cell.c[i].id);
        for (int endpoint : {a, b}) {
          CellTriple face = cell;
          face.c[i] = {false, endpoint};
          if (!has_cell(face)) return false;
        }
      }
  return true;
}

}  // namespace cubforge
