#include "cubforge/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cubforge {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

int Graph::add_vertex(VertexLabel label) {
  labels_.push_back(std::move(label));
  adj_.emplace_back();
  return vertex_count() - 1;
}

int Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  int e = edge_count();
  edges_.emplace_back(u, v);
  adj_[u].push_back({e, v});
  adj_[v].push_back({e, u});
  return e;
}

const VertexLabel& Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

VertexLabel& Graph::label(int v) {
  check_vertex(v);
  return labels_[v];
}

const std::pair<int, int>& Graph::edge(int e) const {
  if (e < 0 || e >= edge_count())
    throw std::invalid_argument("unknown edge id " + std::to_string(e));
  return edges_[e];
}

int Graph::other_endpoint(int e, int v) const {
  const auto& [a, b] = edge(e);
  if (v == a) return b;
  if (v == b) return a;
  throw std::invalid_argument("vertex not an endpoint of edge");
}

const std::vector<IncidentEdge>& Graph::incident(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degree(v));
  for (const auto& ie : incident(v)) out.push_back(ie.to);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::vertices_with(Side s) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v].side == s) out.push_back(v);
  return out;
}

std::vector<int> Graph::vertices_with(Side s, int part) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v].side == s && labels_[v].part == part) out.push_back(v);
  return out;
}

bool Graph::all_sides_tagged() const {
  for (const auto& l : labels_)
    if (l.side == Side::none) return false;
  return true;
}

bool Graph::is_crossing() const {
  if (!all_sides_tagged()) return false;
  for (const auto& [u, v] : edges_)
    if (labels_[u].side == labels_[v].side) return false;
  return true;
}

std::optional<std::pair<int, int>> Graph::parallel_pair() const {
  std::set<std::pair<int, int>> seen_pairs;
  std::vector<int> first_edge;
  for (int e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    if (u > v) std::swap(u, v);
    auto [it, inserted] = seen_pairs.insert({u, v});
    if (!inserted) {
      for (int f = 0; f < e; ++f) {
        auto [a, b] = edges_[f];
        if (a > b) std::swap(a, b);
        if (a == u && b == v) return std::make_pair(f, e);
      }
    }
  }
  return std::nullopt;
}

std::optional<CycleWitness> Graph::find_four_cycle() const {
  const int n = vertex_count();
  // Deduplicated sorted adjacency per vertex.
  std::vector<std::vector<int>> simple_adj(n);
  for (int v = 0; v < n; ++v) {
    auto nb = neighbors(v);
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    simple_adj[v] = std::move(nb);
  }
  std::optional<CycleWitness> best;
  auto consider = [&](int a, int b, int c, int d) {
    std::vector<int> w{a, b, c, d};
    if (!best || w < best->vertices) best = CycleWitness{w};
  };
  for (int a = 0; a < n; ++a) {
    const auto& nb = simple_adj[a];
    for (size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] < a) continue;  // a must be the least vertex on the cycle
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int b = nb[i], d = nb[j];
        // common neighbour c of b and d, distinct from a
        const auto& nb_b = simple_adj[b];
        const auto& nb_d = simple_adj[d];
        size_t p = 0, q = 0;
        while (p < nb_b.size() && q < nb_d.size()) {
          if (nb_b[p] < nb_d[q]) ++p;
          else if (nb_b[p] > nb_d[q]) ++q;
          else {
            int c = nb_b[p];
            if (c != a && c > a) { consider(a, b, c, d); break; }
            if (c != a && c < a) { ++p; ++q; continue; }  // cycle already seen from c
            ++p; ++q;
          }
        }
      }
    }
    if (best && best->vertices[0] == a) break;  // later starts are larger
  }
  return best;
}

std::optional<int> Graph::girth() const {
  if (parallel_pair()) return 2;
  const int n = vertex_count();
  int best = -1;
  std::vector<int> dist(n), par_edge(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par_edge.begin(), par_edge.end(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (best != -1 && 2 * dist[u] >= best) break;
      for (const auto& ie : adj_[u]) {
        if (ie.edge == par_edge[u]) continue;
        if (dist[ie.to] == -1) {
          dist[ie.to] = dist[u] + 1;
          par_edge[ie.to] = ie.edge;
          queue.push_back(ie.to);
        } else {
          int len = dist[u] + dist[ie.to] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

bool Graph::is_connected_subset(const std::vector<int>& subset) const {
  if (subset.empty()) return false;
  return components_within(subset).size() == 1;
}

std::vector<std::vector<int>> Graph::components_within(const std::vector<int>& subset) const {
  std::vector<char> in(vertex_count(), 0), seen(vertex_count(), 0);
  for (int v : subset) {
    check_vertex(v);
    in[v] = 1;
  }
  std::vector<int> order = subset;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<std::vector<int>> comps;
  for (int s : order) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (const auto& ie : adj_[comp[head]]) {
        if (in[ie.to] && !seen[ie.to]) {
          seen[ie.to] = 1;
          comp.push_back(ie.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const {
  std::vector<int> all(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) all[v] = v;
  return is_connected_subset(all);
}

const char* to_string(Side s) {
  switch (s) {
    case Side::A: return "A";
    case Side::B: return "B";
    default: return "";
  }
}

}  // namespace cubforge
