#include "cubforge/labeling.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubforge/projective.hpp"

namespace cubforge {

using nlohmann::json;

Perm perm_identity(int q) {
  Perm p(q);
  for (int i = 0; i < q; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& p, const Perm& r) {
  if (p.size() != r.size()) throw std::invalid_argument("composing permutations of different degree");
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = r[p[i]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

Perm perm_power(const Perm& p, long long k) {
  Perm base = k < 0 ? perm_inverse(p) : p;
  unsigned long long n = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Perm out = perm_identity(static_cast<int>(p.size()));
  while (n > 0) {
    if (n & 1) out = perm_compose(out, base);
    base = perm_compose(base, base);
    n >>= 1;
  }
  return out;
}

bool perm_is_full_cycle(const Perm& p) {
  const int q = static_cast<int>(p.size());
  if (q == 0) return false;
  int at = 0, steps = 0;
  do {
    at = p[at];
    ++steps;
  } while (at != 0 && steps <= q);
  return steps == q;
}

Perm perm_alpha(int q) {
  Perm p(q);
  for (int i = 0; i < q; ++i) p[i] = (i + 1) % q;
  return p;
}

Perm perm_beta(int q, int l) {
  Perm p(q);
  for (int i = 0; i < q; ++i) p[i] = static_cast<int>(static_cast<long long>(l) * i % q);
  return p;
}

bool is_primitive_root(int l, int q) {
  if (!is_prime(q)) throw std::invalid_argument("primitive roots are mod a prime");
  long long x = ((l % q) + q) % q;
  if (x == 0) return false;
  long long cur = x;
  int order = 1;
  while (cur != 1) {
    cur = cur * x % q;
    ++order;
  }
  return order == q - 1;
}

int least_primitive_root(int q) {
  for (int l = 1; l < q; ++l)
    if (is_primitive_root(l, q)) return l;
  if (q == 2) return 1;
  throw std::logic_error("no primitive root mod " + std::to_string(q));
}

namespace {

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// l^k mod q for prime q and l coprime to q; k reduced mod q-1, so negative
// exponents mean inverse powers
int modpow_cyclic(int l, long long k, int q) {
  if (q == 2) return 1;
  long long e = k % (q - 1);
  if (e < 0) e += q - 1;
  long long r = 1, b = ((l % q) + q) % q;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
  }
  return static_cast<int>(r);
}

// Proper edge coloring of a crossing multigraph with max-degree many colors,
// deterministic: edges in id order, least free color, one alternating-chain
// flip when the least free colors at the two endpoints differ.
std::vector<int> edge_coloring(const Graph& g) {
  if (!g.all_sides_tagged() || !g.is_crossing())
    throw std::invalid_argument("edge coloring needs a side-tagged crossing graph");
  const int delta = max_degree(g);
  std::vector<std::vector<int>> at(g.vertex_count(), std::vector<int>(delta, -1));
  std::vector<int> color(g.edge_count(), -1);
  auto least_free = [&](int v) {
    for (int c = 0; c < delta; ++c)
      if (at[v][c] < 0) return c;
    throw std::logic_error("no free color, coloring invariant broken");
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edge(e);
    int cu = least_free(u), cv = least_free(v);
    if (cu != cv && at[v][cu] >= 0) {
      // flip the cu/cv chain from v; crossing edges make it a path missing u
      std::vector<int> chain;
      int cur = v, want = cu;
      while (at[cur][want] >= 0) {
        int ed = at[cur][want];
        chain.push_back(ed);
        cur = g.other_endpoint(ed, cur);
        want = want == cu ? cv : cu;
      }
      for (int ed : chain) {
        const auto& [p, r] = g.edge(ed);
        at[p][color[ed]] = -1;
        at[r][color[ed]] = -1;
      }
      for (int ed : chain) {
        color[ed] = color[ed] == cu ? cv : cu;
        const auto& [p, r] = g.edge(ed);
        if (at[p][color[ed]] >= 0 || at[r][color[ed]] >= 0)
          throw std::logic_error("chain flip collided, graph is not bipartite");
        at[p][color[ed]] = ed;
        at[r][color[ed]] = ed;
      }
    }
    if (at[u][cu] >= 0 || at[v][cu] >= 0) throw std::logic_error("color still blocked after flip");
    color[e] = cu;
    at[u][cu] = e;
    at[v][cu] = e;
  }
  return color;
}

}  // namespace

int choose_q(const Graph& gi, const Graph& gj) {
  int q = std::max({2, max_degree(gi) + 1, max_degree(gj) + 1});
  while (!is_prime(q)) ++q;
  return q;
}

json LabelingScheme::to_json() const {
  return json{{"q", q}, {"l", l}, {"alpha_exp", alpha_exp}, {"beta_exp", beta_exp}};
}

LabelingScheme build_labeling(const Graph& gi, const Graph& gj, int q) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (q <= max_degree(gi) || q <= max_degree(gj))
    throw std::invalid_argument("q must exceed both maximum degrees");
  LabelingScheme s;
  s.q = q;
  s.l = least_primitive_root(q);
  for (int c : edge_coloring(gi)) s.alpha_exp.push_back(c + 1);
  for (int c : edge_coloring(gj)) s.beta_exp.push_back(c + 1);
  if (!labeling_ok(gi, gj, s)) throw std::logic_error("constructed labeling fails its own checks");
  return s;
}

bool labeling_ok(const Graph& gi, const Graph& gj, const LabelingScheme& s) {
  if (!is_prime(s.q)) return false;
  if (s.q <= max_degree(gi) || s.q <= max_degree(gj)) return false;
  if (static_cast<int>(s.alpha_exp.size()) != gi.edge_count()) return false;
  if (static_cast<int>(s.beta_exp.size()) != gj.edge_count()) return false;
  for (int x : s.alpha_exp)
    if (x < 1 || x >= s.q) return false;
  for (int y : s.beta_exp)
    if (y < 1 || y >= s.q) return false;
  // incoming labels distinct: alpha powers mod q, beta powers mod q-1
  for (int v = 0; v < gi.vertex_count(); ++v) {
    std::vector<int> seen;
    for (const auto& ie : gi.incident(v)) seen.push_back(s.alpha_exp[ie.edge] % s.q);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  const int qm1 = s.q == 2 ? 1 : s.q - 1;
  for (int v = 0; v < gj.vertex_count(); ++v) {
    std::vector<int> seen;
    for (const auto& ie : gj.incident(v)) seen.push_back(s.beta_exp[ie.edge] % qm1);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  if (!is_primitive_root(s.l, s.q)) return false;
  Perm alpha = perm_alpha(s.q), beta = perm_beta(s.q, s.l);
  Perm conj = perm_compose(perm_compose(perm_inverse(beta), alpha), beta);
  return conj == perm_power(alpha, s.l);
}

int commutator_exponent(long long m, long long n, int l, int q) {
  long long t = (modpow_cyclic(l, m, q) - 1 + q) % q;
  long long nn = n % q;
  if (nn < 0) nn += q;
  return static_cast<int>(nn * t % q);
}

json HolonomyReport::to_json() const {
  json j{{"ok", ok},
         {"removed_corners", removed_corners},
         {"loops_checked", loops_checked},
         {"exponents_match", exponents_match}};
  if (failure) {
    j["failure"] = json{{"a", failure->a},   {"b", failure->b},   {"ei", failure->ei},
                        {"ei2", failure->ei2}, {"ej", failure->ej}, {"ej2", failure->ej2}};
    j["reason"] = reason;
  }
  return j;
}

HolonomyReport loop4_holonomy_check(const Graph& gi, const Graph& gj, const LabelingScheme& s) {
  if (!labeling_ok(gi, gj, s)) throw std::invalid_argument("labeling fails its preconditions");
  HolonomyReport rep;
  const int q = s.q, l = s.l;
  const Perm alpha = perm_alpha(q), beta = perm_beta(q, l);

  for (int a : gi.vertices_with(Side::A)) {
    const auto& inc_a = gi.incident(a);
    for (int b : gj.vertices_with(Side::B)) {
      ++rep.removed_corners;
      const auto& inc_b = gj.incident(b);
      for (std::size_t i1 = 0; i1 + 1 < inc_a.size() && !rep.failure; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < inc_a.size() && !rep.failure; ++i2)
          for (std::size_t j1 = 0; j1 + 1 < inc_b.size() && !rep.failure; ++j1)
            for (std::size_t j2 = j1 + 1; j2 < inc_b.size(); ++j2) {
              ++rep.loops_checked;
              const int x = s.alpha_exp[inc_a[i1].edge], x2 = s.alpha_exp[inc_a[i2].edge];
              const int y = s.beta_exp[inc_b[j1].edge], y2 = s.beta_exp[inc_b[j2].edge];
              // octagon around the removed corner (a, b): down the first
              // column, across the first row, back, across the second
              Perm w = perm_power(beta, -y);
              w = perm_compose(w, perm_power(alpha, -x));
              w = perm_compose(w, perm_power(alpha, x2));
              w = perm_compose(w, perm_power(beta, y));
              w = perm_compose(w, perm_power(beta, -y2));
              w = perm_compose(w, perm_power(alpha, -x2));
              w = perm_compose(w, perm_power(alpha, x));
              w = perm_compose(w, perm_power(beta, y2));
              const int ex = static_cast<int>(
                  static_cast<long long>(commutator_exponent(-(y - y2), x - x2, l, q)) *
                  modpow_cyclic(l, y, q) % q);
              if (w != perm_power(alpha, ex)) {
                rep.exponents_match = false;
                rep.failure = HolonomyReport::Failure{a, b, inc_a[i1].edge, inc_a[i2].edge,
                                                      inc_b[j1].edge, inc_b[j2].edge};
                rep.reason = "composed walk differs from the predicted alpha power";
                break;
              }
              if (!perm_is_full_cycle(w)) {
                rep.failure = HolonomyReport::Failure{a, b, inc_a[i1].edge, inc_a[i2].edge,
                                                      inc_b[j1].edge, inc_b[j2].edge};
                rep.reason = "holonomy around a removed corner is not a q-cycle";
                break;
              }
            }
      if (rep.failure) break;
    }
    if (rep.failure) break;
  }
  rep.ok = !rep.failure;
  return rep;
}

}  // namespace cubforge
