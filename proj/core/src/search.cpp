#include "cubforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "cubforge/digest.hpp"
#include "cubforge/graph_io.hpp"
#include "cubforge/parallel.hpp"
#include "cubforge/projective.hpp"

namespace cubforge {

using nlohmann::json;

namespace {

constexpr long long kCheckpointEvery = 1'000'000;

void save_checkpoint(const std::string& path, const json& state) {
  if (path.empty()) return;
  std::ofstream out(path + ".tmp");
  out << state.dump();
  out.close();
  std::rename((path + ".tmp").c_str(), path.c_str());
}

std::optional<json> load_checkpoint(const std::string& path, const std::string& key) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json state = json::parse(in, nullptr, false);
  if (state.is_discarded() || !state.contains("key") || state["key"] != key) return std::nullopt;
  return state;
}

std::string graph_key(const Graph& g) {
  return fnv1a64_hex(graph_to_json(g).dump());
}

// Frontier BFS over a <=64 vertex adjacency mask array.
bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t sub) {
  if (sub == 0) return false;
  std::uint64_t reach = sub & (~sub + 1);  // lowest set bit
  std::uint64_t frontier = reach;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = __builtin_ctzll(f);
      f &= f - 1;
      next |= adj[v];
    }
    next &= sub & ~reach;
    reach |= next;
    frontier = next;
  }
  return reach == sub;
}

}  // namespace

BipartitionSearchResult search_bipartitions(const Graph& g, const SearchOptions& opts) {
  BipartitionSearchResult res;
  if (!g.all_sides_tagged()) throw std::invalid_argument("search needs side tags on every vertex");
  if (!g.is_crossing()) throw std::invalid_argument("search needs a bipartite A/B graph");
  if (g.parallel_pair()) throw std::invalid_argument("search needs a simple graph");
  if (g.vertex_count() > 64) throw std::invalid_argument("search capped at 64 vertices");

  if (auto cyc = g.find_four_cycle()) {
    res.aborted_four_cycle = true;
    res.four_cycle = *cyc;
    return res;
  }

  const auto as = g.vertices_with(Side::A);
  const auto bs = g.vertices_with(Side::B);
  const int na = static_cast<int>(as.size()), nb = static_cast<int>(bs.size());
  if (na < 2 || nb < 2) return res;  // some part would be empty
  if (na > 30 || nb > 30) throw std::invalid_argument("side too large to enumerate");

  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }

  // Part masks are indexed over the side lists; bit 0 is pinned to part 0.
  auto side_survivors = [&](const std::vector<int>& side, const std::vector<int>& other) {
    std::vector<std::uint32_t> keep;
    const int n = static_cast<int>(side.size());
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::uint32_t m = mask << 1;  // side[0] stays in part 0
      std::uint64_t part0 = 0, part1 = 0;
      for (int i = 0; i < n; ++i)
        (m >> i & 1 ? part1 : part0) |= 1ULL << side[i];
      bool ok = true;
      for (int v : other)
        if (!(adj[v] & part0) || !(adj[v] & part1)) { ok = false; break; }
      if (ok) keep.push_back(m);
    }
    return keep;
  };

  auto a_keep = side_survivors(as, bs);
  auto b_keep = side_survivors(bs, as);
  res.a_masks_kept = static_cast<long long>(a_keep.size());
  res.b_masks_kept = static_cast<long long>(b_keep.size());

  std::vector<std::uint64_t> a_part0(a_keep.size()), a_part1(a_keep.size());
  for (size_t i = 0; i < a_keep.size(); ++i)
    for (int k = 0; k < na; ++k)
      (a_keep[i] >> k & 1 ? a_part1[i] : a_part0[i]) |= 1ULL << as[k];
  std::vector<std::uint64_t> b_part0(b_keep.size()), b_part1(b_keep.size());
  for (size_t i = 0; i < b_keep.size(); ++i)
    for (int k = 0; k < nb; ++k)
      (b_keep[i] >> k & 1 ? b_part1[i] : b_part0[i]) |= 1ULL << bs[k];

  const std::string key = "bipartitions:" + graph_key(g);
  size_t start_a = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hit_masks;
  if (auto cp = load_checkpoint(opts.checkpoint, key)) {
    start_a = (*cp)["next_a"].get<size_t>();
    res.assignments_tried = (*cp)["assignments"].get<long long>();
    for (const auto& h : (*cp)["hits"])
      hit_masks.emplace_back(h[0].get<std::uint32_t>(), h[1].get<std::uint32_t>());
    if (opts.log) opts.log("resumed at A index " + std::to_string(start_a));
  }

  const int threads = resolve_threads(opts.threads);
  const size_t block = std::max<size_t>(64, static_cast<size_t>(threads) * 16);
  long long since_save = 0;
  bool done = false;
  for (size_t a0 = start_a; a0 < a_keep.size() && !done; a0 += block) {
    const size_t a_end = std::min(a_keep.size(), a0 + block);
    std::vector<std::vector<std::uint32_t>> found(a_end - a0);
    parallel_for(static_cast<long long>(a_end - a0), threads, [&](long long off) {
      const size_t ai = a0 + static_cast<size_t>(off);
      for (size_t bi = 0; bi < b_keep.size(); ++bi) {
        if (mask_connected(adj, a_part0[ai] | b_part0[bi]) &&
            mask_connected(adj, a_part0[ai] | b_part1[bi]) &&
            mask_connected(adj, a_part1[ai] | b_part0[bi]) &&
            mask_connected(adj, a_part1[ai] | b_part1[bi]))
          found[off].push_back(b_keep[bi]);
      }
    });
    for (size_t off = 0; off < found.size() && !done; ++off) {
      for (std::uint32_t bm : found[off]) {
        hit_masks.emplace_back(a_keep[a0 + off], bm);
        if (opts.limit >= 0 && static_cast<long long>(hit_masks.size()) >= opts.limit) {
          done = true;
          break;
        }
      }
    }
    res.assignments_tried += static_cast<long long>((a_end - a0) * b_keep.size());
    since_save += static_cast<long long>((a_end - a0) * b_keep.size());
    if (!opts.checkpoint.empty() && since_save >= kCheckpointEvery && !done) {
      json hits_json = json::array();
      for (const auto& [am, bm] : hit_masks) hits_json.push_back({am, bm});
      save_checkpoint(opts.checkpoint, json{{"key", key},
                                            {"next_a", a_end},
                                            {"assignments", res.assignments_tried},
                                            {"hits", hits_json}});
      since_save = 0;
    }
  }

  for (const auto& [am, bm] : hit_masks) {
    std::vector<int> parts(g.vertex_count(), 0);
    for (int k = 0; k < na; ++k) parts[as[k]] = am >> k & 1;
    for (int k = 0; k < nb; ++k) parts[bs[k]] = bm >> k & 1;
    SizeablePartition p(std::move(parts));
    if (!verify_sizeable(g, p).verdict)
      throw std::logic_error("search produced a non-sizeable partition");
    res.hits.push_back(std::move(p));
  }
  return res;
}

static Graph induced_without(const Graph& g, int drop1, int drop2, std::vector<int>* old_ids) {
  Graph h;
  std::vector<int> map(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == drop1 || v == drop2) continue;
    map[v] = h.add_vertex(g.label(v));
    if (old_ids) old_ids->push_back(v);
  }
  for (const auto& [u, v] : g.edges())
    if (map[u] >= 0 && map[v] >= 0) h.add_edge(map[u], map[v]);
  return h;
}

json Minimal24Result::to_json() const {
  json j{{"found", found}, {"candidates_tried", candidates_tried}};
  if (found) {
    j["point_deleted"] = point_deleted;
    j["line_deleted"] = line_deleted;
    j["edge_count"] = edge_count;
    j["graph"] = graph_to_json(graph);
  }
  return j;
}

Minimal24Result find_minimal_24(const SearchOptions& opts) {
  Minimal24Result res;
  const Graph plane = pg_incidence(3);
  const int m = 13;

  const std::string key = "minimal24";
  int start = 0;
  if (auto cp = load_checkpoint(opts.checkpoint, key)) {
    start = (*cp)["next"].get<int>();
    res.candidates_tried = (*cp)["tried"].get<long long>();
  }

  SearchOptions inner = opts;
  inner.limit = 1;
  inner.checkpoint.clear();  // progress is tracked at candidate granularity

  for (int idx = start; idx < m * m; ++idx) {
    const int p = idx / m, l = m + idx % m;
    std::vector<int> old_ids;
    Graph cand = induced_without(plane, p, l, &old_ids);
    ++res.candidates_tried;
    auto found = search_bipartitions(cand, inner);
    if (!found.hits.empty()) {
      const auto& part = found.hits.front();
      for (int v = 0; v < cand.vertex_count(); ++v) cand.label(v).part = part.part(v);
      res.found = true;
      res.point_deleted = p;
      res.line_deleted = l;
      res.edge_count = cand.edge_count();
      res.partition = part;
      res.graph = std::move(cand);
      return res;
    }
    if (!opts.checkpoint.empty())
      save_checkpoint(opts.checkpoint,
                      json{{"key", key}, {"next", idx + 1}, {"tried", res.candidates_tried}});
  }
  return res;
}

json Refute23Result::to_json() const {
  return {{"candidate_edges", candidate_edges},
          {"dual_edges", dual_edges},
          {"candidate_sides", {candidate_sides_a, candidate_sides_b}},
          {"candidate_assignments", candidate_assignments},
          {"dual_assignments", dual_assignments},
          {"partitions_found", partitions_found}};
}

Refute23Result refute_23(const SearchOptions& opts) {
  const Graph plane = pg_incidence(3);
  const int m = 13;

  // Two points and the unique line through both; ids 0 and 1 will do, the
  // collineation group is transitive on such configurations.
  auto common_neighbor = [&](int u, int v) {
    for (int w : plane.neighbors(u))
      for (int x : plane.neighbors(v))
        if (w == x) return w;
    throw std::logic_error("projective plane without a common line");
  };

  Refute23Result res;
  SearchOptions inner = opts;

  {
    int line = common_neighbor(0, 1);
    Graph cand = induced_without(plane, 0, 1, nullptr);
    // line kept its position shifted by the two removed points
    Graph cand2 = induced_without(cand, line - 2, -1, nullptr);
    res.candidate_edges = cand2.edge_count();
    res.candidate_sides_a = static_cast<int>(cand2.vertices_with(Side::A).size());
    res.candidate_sides_b = static_cast<int>(cand2.vertices_with(Side::B).size());
    if (!inner.checkpoint.empty()) inner.checkpoint = opts.checkpoint + ".primal";
    auto r = search_bipartitions(cand2, inner);
    res.candidate_assignments = r.assignments_tried;
    res.partitions_found += static_cast<long long>(r.hits.size());
  }
  {
    int point = common_neighbor(m, m + 1);
    Graph cand = induced_without(plane, m, m + 1, nullptr);
    Graph cand2 = induced_without(cand, point, -1, nullptr);
    res.dual_edges = cand2.edge_count();
    if (!inner.checkpoint.empty()) inner.checkpoint = opts.checkpoint + ".dual";
    auto r = search_bipartitions(cand2, inner);
    res.dual_assignments = r.assignments_tried;
    res.partitions_found += static_cast<long long>(r.hits.size());
  }
  return res;
}

namespace {

// Incremental 4-cycle-free edge placement over a <=64 vertex graph.  Every
// successful placement counts as an explored node.
struct ShapedState {
  std::vector<std::uint64_t> adj;
  std::vector<std::pair<int, int>> stack;
  long long nodes = 0;

  explicit ShapedState(int nverts) : adj(nverts, 0) {}

  bool try_edge(int u, int v) {
    if (adj[u] >> v & 1) return false;
    // a new 4-cycle through (u, v) is a common neighbor of u and some
    // neighbor of v; u is never a neighbor of v here
    const std::uint64_t not_v = ~(1ULL << v);
    for (std::uint64_t nb = adj[v]; nb; nb &= nb - 1)
      if (adj[__builtin_ctzll(nb)] & adj[u] & not_v) return false;
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
    stack.emplace_back(u, v);
    ++nodes;
    return true;
  }

  void rewind(std::size_t mark) {
    while (stack.size() > mark) {
      auto [u, v] = stack.back();
      stack.pop_back();
      adj[u] &= ~(1ULL << v);
      adj[v] &= ~(1ULL << u);
    }
  }
};

std::string block_name(char side, int part, int i) {
  return std::string(1, side) + std::to_string(part) + "_" + std::to_string(i);
}

Graph materialize_blocks(const std::array<int, 4>& sz, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  for (int i = 0; i < sz[0]; ++i) g.add_vertex({Side::A, 0, block_name('a', 0, i)});
  for (int i = 0; i < sz[1]; ++i) g.add_vertex({Side::A, 1, block_name('a', 1, i)});
  for (int i = 0; i < sz[2]; ++i) g.add_vertex({Side::B, 0, block_name('b', 0, i)});
  for (int i = 0; i < sz[3]; ++i) g.add_vertex({Side::B, 1, block_name('b', 1, i)});
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph check_witness(const std::array<int, 4>& sz, const std::vector<std::pair<int, int>>& edges) {
  Graph g = materialize_blocks(sz, edges);
  auto rep = verify_sizeable(g, SizeablePartition::from_tags(g));
  if (!rep.verdict) throw std::logic_error("shaped search produced a non-sizeable graph");
  return g;
}

// Every defining subgraph a single 2n-cycle.  Block relabeling lets us pin
// the (A0, B0) cycle, the rotation base point of the other cycle orders, and
// one reflection per free cycle.
class AllCyclesDfs {
 public:
  AllCyclesDfs(int n, const std::atomic<bool>* stop) : n_(n), st_(4 * n), stop_(stop) {
    sigma_.assign(n, -1);
    tau_.assign(n, -1);
    pi_.assign(n, -1);
    rho_.assign(n, -1);
    sigma_[0] = tau_[0] = pi_[0] = 0;
    used_sigma_ = used_tau_ = used_pi_ = 1;
    used_rho_ = 0;
  }

  bool base() {
    for (int i = 0; i < n_; ++i) {
      if (!st_.try_edge(a0(i), b0(i))) return false;
      if (!st_.try_edge(b0(i), a0((i + 1) % n_))) return false;
    }
    return true;
  }

  void run(int s1, int s2) {
    if (n_ == 3 && s2 < s1) return;  // position 2 is the last, reflection
    if (!place_sigma(1, s1)) return;
    if (place_sigma(2, s2)) sigma_dfs(3);
  }

  long long nodes() const { return st_.nodes; }
  const std::optional<Graph>& hit() const { return hit_; }

 private:
  int a0(int i) const { return i; }
  int a1(int i) const { return n_ + i; }
  int b0(int i) const { return 2 * n_ + i; }
  int b1(int i) const { return 3 * n_ + i; }

  bool stopped() const { return stop_ && stop_->load(std::memory_order_relaxed); }

  // b1[i-1] joins sigma(i-1) and sigma(i); the last slot also closes up.
  bool place_sigma(int i, int v) {
    auto mark = st_.stack.size();
    if (!st_.try_edge(a0(sigma_[i - 1]), b1(i - 1)) || !st_.try_edge(b1(i - 1), a0(v)) ||
        (i == n_ - 1 && (!st_.try_edge(a0(v), b1(n_ - 1)) || !st_.try_edge(b1(n_ - 1), a0(0))))) {
      st_.rewind(mark);
      return false;
    }
    sigma_[i] = v;
    used_sigma_ |= 1u << v;
    return true;
  }
  void unplace_sigma(int i) {
    used_sigma_ &= ~(1u << sigma_[i]);
    sigma_[i] = -1;
  }

  bool place_tau(int i, int v) {
    auto mark = st_.stack.size();
    if (!st_.try_edge(b0(tau_[i - 1]), a1(i - 1)) || !st_.try_edge(a1(i - 1), b0(v)) ||
        (i == n_ - 1 && (!st_.try_edge(b0(v), a1(n_ - 1)) || !st_.try_edge(a1(n_ - 1), b0(0))))) {
      st_.rewind(mark);
      return false;
    }
    tau_[i] = v;
    used_tau_ |= 1u << v;
    return true;
  }

  void sigma_dfs(int pos) {
    if (hit_ || stopped()) return;
    if (pos == n_) {
      tau_dfs(1);
      return;
    }
    for (int v = 1; v < n_; ++v) {
      if (used_sigma_ >> v & 1) continue;
      if (pos == n_ - 1 && v < sigma_[1]) continue;  // reflection
      auto mark = st_.stack.size();
      if (!place_sigma(pos, v)) continue;
      sigma_dfs(pos + 1);
      unplace_sigma(pos);
      st_.rewind(mark);
      if (hit_ || stopped()) return;
    }
  }

  void tau_dfs(int pos) {
    if (hit_ || stopped()) return;
    if (pos == n_) {
      four_dfs(0);
      return;
    }
    for (int v = 1; v < n_; ++v) {
      if (used_tau_ >> v & 1) continue;
      if (pos == n_ - 1 && v < tau_[1]) continue;
      auto mark = st_.stack.size();
      if (!place_tau(pos, v)) continue;
      tau_dfs(pos + 1);
      used_tau_ &= ~(1u << v);
      tau_[pos] = -1;
      st_.rewind(mark);
      if (hit_ || stopped()) return;
    }
  }

  // slots alternate rho(0), pi(1), rho(1), ..., pi(n-1), rho(n-1)
  void four_dfs(int k) {
    if (hit_ || stopped()) return;
    if (k == 2 * n_ - 1) {
      hit_ = check_witness({n_, n_, n_, n_}, st_.stack);
      return;
    }
    const bool is_rho = k % 2 == 0;
    const int i = is_rho ? k / 2 : (k + 1) / 2;
    for (int v = is_rho ? 0 : 1; v < n_; ++v) {
      if ((is_rho ? used_rho_ : used_pi_) >> v & 1) continue;
      if (is_rho && i == n_ - 1 && v < rho_[0]) continue;  // reflection
      auto mark = st_.stack.size();
      bool ok;
      if (is_rho) {
        ok = st_.try_edge(a1(pi_[i]), b1(v)) &&
             (i < n_ - 1 || st_.try_edge(b1(v), a1(pi_[0])));
      } else {
        ok = st_.try_edge(b1(rho_[i - 1]), a1(v));
      }
      if (!ok) {
        st_.rewind(mark);
        continue;
      }
      (is_rho ? rho_ : pi_)[i] = v;
      (is_rho ? used_rho_ : used_pi_) |= 1u << v;
      four_dfs(k + 1);
      (is_rho ? used_rho_ : used_pi_) &= ~(1u << v);
      (is_rho ? rho_ : pi_)[i] = -1;
      st_.rewind(mark);
      if (hit_ || stopped()) return;
    }
  }

  int n_;
  ShapedState st_;
  const std::atomic<bool>* stop_;
  std::vector<int> sigma_, tau_, pi_, rho_;
  std::uint32_t used_sigma_, used_tau_, used_pi_, used_rho_;
  std::optional<Graph> hit_;
};

// Every defining subgraph a single path.  A path on blocks of sizes (p, q)
// needs |p - q| <= 1; the heavier block holds both ends.  The (A0, B0) path
// and the interleave orders of the two mixed paths are pinned by block
// relabeling, reflections deduped whenever both path ends lie in one block.
class AllPathsDfs {
 public:
  AllPathsDfs(const std::array<int, 4>& sz, const std::atomic<bool>* stop)
      : sz_(sz), st_(sz[0] + sz[1] + sz[2] + sz[3]), stop_(stop) {
    sigma_.assign(sz_[0], -1);
    tau_.assign(sz_[2], -1);
    pi_.assign(sz_[1], -1);
    rho_.assign(sz_[3], -1);
  }

  bool base() {
    std::vector<int> seq;
    const int p = sz_[0], q = sz_[2];
    if (p >= q) {
      for (int i = 0; i < q; ++i) {
        seq.push_back(a0(i));
        seq.push_back(b0(i));
      }
      if (p == q + 1) seq.push_back(a0(p - 1));
    } else {
      for (int i = 0; i < p; ++i) {
        seq.push_back(b0(i));
        seq.push_back(a0(i));
      }
      seq.push_back(b0(q - 1));
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      if (!st_.try_edge(seq[i], seq[i + 1])) return false;
    return true;
  }

  void run(int s0) {
    if (place_sigma(0, s0)) sigma_dfs(1);
  }

  long long nodes() const { return st_.nodes; }
  const std::optional<Graph>& hit() const { return hit_; }

 private:
  int a0(int i) const { return i; }
  int a1(int i) const { return sz_[0] + i; }
  int b0(int i) const { return sz_[0] + sz_[1] + i; }
  int b1(int i) const { return sz_[0] + sz_[1] + sz_[2] + i; }

  bool stopped() const { return stop_ && stop_->load(std::memory_order_relaxed); }

  // (A0, B1) path: A0 order sigma, B1 labeled canonically along the path
  bool place_sigma(int i, int v) {
    const int p = sz_[0], q = sz_[3];
    if (p != q && i == p - 1 && i >= 1 && v < sigma_[0]) return false;  // reflection
    auto mark = st_.stack.size();
    bool ok = true;
    if (q == p + 1) {
      ok = st_.try_edge(b1(i), a0(v)) && st_.try_edge(a0(v), b1(i + 1));
    } else {
      if (i >= 1)
        ok = st_.try_edge(a0(sigma_[i - 1]), b1(i - 1)) && st_.try_edge(b1(i - 1), a0(v));
      if (ok && p == q && i == p - 1) ok = st_.try_edge(a0(v), b1(q - 1));
    }
    if (!ok) {
      st_.rewind(mark);
      return false;
    }
    sigma_[i] = v;
    used_sigma_ |= 1u << v;
    return true;
  }

  // (A1, B0) path: B0 order tau, A1 labeled canonically along the path
  bool place_tau(int i, int v) {
    const int p = sz_[2], q = sz_[1];
    if (p != q && i == p - 1 && i >= 1 && v < tau_[0]) return false;
    auto mark = st_.stack.size();
    bool ok = true;
    if (q == p + 1) {
      ok = st_.try_edge(a1(i), b0(v)) && st_.try_edge(b0(v), a1(i + 1));
    } else {
      if (i >= 1)
        ok = st_.try_edge(b0(tau_[i - 1]), a1(i - 1)) && st_.try_edge(a1(i - 1), b0(v));
      if (ok && p == q && i == p - 1) ok = st_.try_edge(b0(v), a1(q - 1));
    }
    if (!ok) {
      st_.rewind(mark);
      return false;
    }
    tau_[i] = v;
    used_tau_ |= 1u << v;
    return true;
  }

  void sigma_dfs(int pos) {
    if (hit_ || stopped()) return;
    if (pos == sz_[0]) {
      tau_dfs(0);
      return;
    }
    for (int v = 0; v < sz_[0]; ++v) {
      if (used_sigma_ >> v & 1) continue;
      auto mark = st_.stack.size();
      if (!place_sigma(pos, v)) continue;
      sigma_dfs(pos + 1);
      used_sigma_ &= ~(1u << v);
      sigma_[pos] = -1;
      st_.rewind(mark);
      if (hit_ || stopped()) return;
    }
  }

  void tau_dfs(int pos) {
    if (hit_ || stopped()) return;
    if (pos == sz_[2]) {
      four_dfs(0);
      return;
    }
    for (int v = 0; v < sz_[2]; ++v) {
      if (used_tau_ >> v & 1) continue;
      auto mark = st_.stack.size();
      if (!place_tau(pos, v)) continue;
      tau_dfs(pos + 1);
      used_tau_ &= ~(1u << v);
      tau_[pos] = -1;
      st_.rewind(mark);
      if (hit_ || stopped()) return;
    }
  }

  // (A1, B1) path over both labeled blocks; slots alternate starting from
  // the heavier side (A1 when equal)
  void four_dfs(int k) {
    if (hit_ || stopped()) return;
    const int m = sz_[1], w = sz_[3];
    if (k == m + w) {
      hit_ = check_witness(sz_, st_.stack);
      return;
    }
    const bool a_first = m >= w;
    const bool is_pi = a_first == (k % 2 == 0);
    const int i = k / 2;
    for (int v = 0; v < (is_pi ? m : w); ++v) {
      if ((is_pi ? used_pi_ : used_rho_) >> v & 1) continue;
      if (k == m + w - 1 && m != w && v < (is_pi ? pi_ : rho_)[0]) continue;  // reflection
      auto mark = st_.stack.size();
      bool ok = true;
      if (k > 0) {
        if (is_pi)
          ok = st_.try_edge(b1(rho_[a_first ? i - 1 : i]), a1(v));
        else
          ok = st_.try_edge(a1(pi_[a_first ? i : i - 1]), b1(v));
      }
      if (!ok) {
        st_.rewind(mark);
        continue;
      }
      (is_pi ? pi_ : rho_)[i] = v;
      (is_pi ? used_pi_ : used_rho_) |= 1u << v;
      four_dfs(k + 1);
      (is_pi ? used_pi_ : used_rho_) &= ~(1u << v);
      (is_pi ? pi_ : rho_)[i] = -1;
      st_.rewind(mark);
      if (hit_ || stopped()) return;
    }
  }

  std::array<int, 4> sz_;
  ShapedState st_;
  const std::atomic<bool>* stop_;
  std::vector<int> sigma_, tau_, pi_, rho_;
  std::uint32_t used_sigma_ = 0, used_tau_ = 0, used_pi_ = 0, used_rho_ = 0;
  std::optional<Graph> hit_;
};

// Shared branch runner: deterministic branch list, first hit wins by branch
// index, completed branches checkpointed with their node totals.
template <typename Fn>
ShapedSearchResult run_shaped_branches(std::size_t nbranches, const std::string& key,
                                       const SearchOptions& opts, Fn&& branch_fn) {
  ShapedSearchResult res;
  std::vector<char> completed(nbranches, 0);
  long long completed_nodes = 0;
  if (auto cp = load_checkpoint(opts.checkpoint, key)) {
    for (const auto& b : (*cp)["completed"]) {
      std::size_t i = b.get<std::size_t>();
      if (i < nbranches) completed[i] = 1;
    }
    completed_nodes = (*cp)["nodes"].get<long long>();
    if (opts.log)
      opts.log(key + ": resumed, " +
               std::to_string(std::count(completed.begin(), completed.end(), 1)) + "/" +
               std::to_string(nbranches) + " branches done");
  }

  std::atomic<bool> stop{false};
  std::mutex mu;
  std::optional<std::pair<std::size_t, Graph>> best;
  long long hit_nodes = 0;
  parallel_for(static_cast<long long>(nbranches), resolve_threads(opts.threads),
               [&](long long bi) {
                 if (completed[bi] || stop.load(std::memory_order_relaxed)) return;
                 auto [nodes, hit] = branch_fn(static_cast<std::size_t>(bi), &stop);
                 std::lock_guard<std::mutex> lk(mu);
                 if (hit) {
                   if (!best || static_cast<std::size_t>(bi) < best->first) {
                     best = {static_cast<std::size_t>(bi), std::move(*hit)};
                     hit_nodes = nodes;
                   }
                   stop.store(true);
                 } else if (!stop.load()) {
                   completed[bi] = 1;
                   completed_nodes += nodes;
                   if (!opts.checkpoint.empty()) {
                     json state{{"key", key}, {"nodes", completed_nodes}};
                     auto arr = json::array();
                     for (std::size_t i = 0; i < nbranches; ++i)
                       if (completed[i]) arr.push_back(i);
                     state["completed"] = std::move(arr);
                     save_checkpoint(opts.checkpoint, state);
                   }
                   if (opts.log)
                     opts.log(key + ": branch " + std::to_string(bi) + " done, " +
                              std::to_string(nodes) + " nodes");
                 }
               });
  res.nodes_explored = completed_nodes + hit_nodes;
  if (best) {
    res.found = true;
    res.graph = std::move(best->second);
  }
  return res;
}

}  // namespace

ShapedSearchResult search_all_cycles(int n, const SearchOptions& opts) {
  if (n < 2) throw std::invalid_argument("block size must be at least 2");
  if (4 * n > 64) throw std::invalid_argument("search capped at 64 vertices");

  std::vector<std::pair<int, int>> branches;
  for (int s1 = 1; s1 < n; ++s1)
    for (int s2 = 1; s2 < n; ++s2)
      if (s2 != s1) branches.emplace_back(s1, s2);
  if (branches.empty()) {
    // n == 2: the pinned first cycle is itself a 4-cycle
    AllCyclesDfs probe(n, nullptr);
    probe.base();
    ShapedSearchResult res;
    res.nodes_explored = probe.nodes();
    return res;
  }

  const std::string key = "cycles:" + std::to_string(n);
  return run_shaped_branches(
      branches.size(), key, opts,
      [&](std::size_t bi, const std::atomic<bool>* stop)
          -> std::pair<long long, std::optional<Graph>> {
        AllCyclesDfs dfs(n, stop);
        if (dfs.base()) dfs.run(branches[bi].first, branches[bi].second);
        return {dfs.nodes(), dfs.hit()};
      });
}

ShapedSearchResult search_all_paths(int total_vertices, const SearchOptions& opts) {
  if (total_vertices > 64) throw std::invalid_argument("search capped at 64 vertices");

  auto near = [](int x, int y) { return x - y <= 1 && y - x <= 1; };
  std::vector<std::pair<std::array<int, 4>, int>> branches;
  for (int na0 = 1; na0 <= total_vertices - 3; ++na0)
    for (int na1 = 1; na0 + na1 <= total_vertices - 2; ++na1)
      for (int nb0 = 1; na0 + na1 + nb0 <= total_vertices - 1; ++nb0) {
        const int nb1 = total_vertices - na0 - na1 - nb0;
        if (!near(na0, nb0) || !near(na0, nb1) || !near(na1, nb0) || !near(na1, nb1)) continue;
        for (int s0 = 0; s0 < na0; ++s0)
          branches.push_back({{na0, na1, nb0, nb1}, s0});
      }
  if (branches.empty()) return {};

  const std::string key = "paths:" + std::to_string(total_vertices);
  return run_shaped_branches(
      branches.size(), key, opts,
      [&](std::size_t bi, const std::atomic<bool>* stop)
          -> std::pair<long long, std::optional<Graph>> {
        AllPathsDfs dfs(branches[bi].first, stop);
        if (dfs.base()) dfs.run(branches[bi].second);
        return {dfs.nodes(), dfs.hit()};
      });
}

}  // namespace cubforge
