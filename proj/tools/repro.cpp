#include "repro.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>

#include "cubforge/arithmetic.hpp"
#include "cubforge/branched.hpp"
#include "cubforge/complex_x.hpp"
#include "cubforge/homology.hpp"
#include "cubforge/labeling.hpp"
#include "cubforge/morse.hpp"
#include "cubforge/parallel.hpp"
#include "cubforge/random_c4.hpp"
#include "cubforge/search.hpp"
#include "cubforge/sizeable.hpp"
#include "cubforge/zarankiewicz.hpp"

namespace cubforge {

using nlohmann::json;

namespace {

const Minimal24Result& minimal24_cached() {
  static Minimal24Result r = find_minimal_24();
  return r;
}

struct XBundle {
  XSpec spec;
  ProductComplex x;
};

XBundle make_bundle(const Graph& g, const SizeablePartition& p) {
  XSpec spec(g, p, g, p, g, p);
  ProductComplex x = build_x(spec);
  return {std::move(spec), std::move(x)};
}

const XBundle& x24_cached() {
  static XBundle b = [] {
    const auto& m = minimal24_cached();
    if (!m.found) throw std::runtime_error("24-vertex search found nothing");
    return make_bundle(m.graph, m.partition);
  }();
  return b;
}

const XBundle& x9_cached() {
  static XBundle b = [] {
    auto p = arithmetic_example_9();
    return make_bundle(arithmetic_graph(p), arithmetic_partition(p));
  }();
  return b;
}

SearchOptions opts_with(int threads) {
  SearchOptions o;
  o.threads = threads;
  return o;
}

CriterionResult c1_minimal24(int threads) {
  CriterionResult r{1, criterion_name(1), false, {}};
  (void)threads;
  const auto& m = minimal24_cached();
  bool verified = m.found && verify_sizeable(m.graph, m.partition).verdict;
  r.pass = m.found && m.graph.vertex_count() == 24 && verified;
  r.details = m.to_json();
  r.details["verified_sizeable"] = verified;
  return r;
}

CriterionResult c2_refute23(int threads) {
  CriterionResult r{2, criterion_name(2), false, {}};
  auto res = refute_23(opts_with(threads));
  const long long zk = zarankiewicz_formula(3, 2);
  r.pass = res.partitions_found == 0 && res.candidate_edges == 42 && res.dual_edges == 42 &&
           res.candidate_sides_a == 11 && res.candidate_sides_b == 12 && zk == 42;
  r.details = res.to_json();
  r.details["zarankiewicz_3_2"] = zk;
  return r;
}

CriterionResult c3_arithmetic36(int threads) {
  CriterionResult r{3, criterion_name(3), false, {}};
  (void)threads;
  auto r8 = search_arithmetic(8);
  auto r9 = search_arithmetic(9);
  bool contains = std::find(r9.begin(), r9.end(), arithmetic_example_9()) != r9.end();
  r.pass = r8.empty() && !r9.empty() && contains;
  r.details = json{{"hits_n8", r8.size()}, {"hits_n9", r9.size()}, {"contains_published_tuple", contains}};
  return r;
}

CriterionResult c4_euler(int threads) {
  CriterionResult r{4, criterion_name(4), false, {}};
  json d;
  const auto& b24 = x24_cached();
  long long f24 = euler_formula_x(b24.spec.sizes_a(), b24.spec.sizes_b(), b24.spec.sizes_e());
  long long e24 = b24.x.euler_direct(threads);
  d["from_24_vertex_graph"] = json{{"formula", f24}, {"direct", e24}, {"match", f24 == e24}};
  const auto& b9 = x9_cached();
  long long f9 = euler_formula_x(b9.spec.sizes_a(), b9.spec.sizes_b(), b9.spec.sizes_e());
  long long e9 = b9.x.euler_direct(threads);
  d["from_arithmetic_9_graph"] = json{{"formula", f9}, {"direct", e9}, {"match", f9 == e9}};
  // the quoted closed form for the (20, 20, 80) family does not match the
  // printed polynomial; reported as computed
  long long fam = euler_formula_x({20, 20, 20}, {20, 20, 20}, {80, 80, 80});
  d["family_sizes_20_20_80"] = json{{"formula", fam}, {"quoted", -17600}, {"match", fam == -17600}};
  r.pass = f24 == e24 && f9 == e9 && fam == -17600;
  r.details = std::move(d);
  return r;
}

json flag_links_all(const ProductComplex& x, int threads, bool& ok) {
  const auto& verts = x.vertices();
  const long long n = static_cast<long long>(verts.size());
  std::vector<char> bad(n, 0);
  parallel_for(n, threads, [&](long long i) {
    bad[i] = !is_flag(x.vertex_link(verts[i])).flag;
  });
  long long failures = std::count(bad.begin(), bad.end(), char(1));
  ok = failures == 0;
  json j{{"links_checked", n}, {"flag_failures", failures}};
  for (long long i = 0; i < n; ++i)
    if (bad[i]) {
      j["first_failure"] = verts[i];
      break;
    }
  return j;
}

CriterionResult c5_curvature(int threads) {
  CriterionResult r{5, criterion_name(5), false, {}};
  json d;
  bool all = true;
  for (const auto* b : {&x24_cached(), &x9_cached()}) {
    auto lt = verify_link_table(b->spec, b->x, threads);
    bool flag_ok = false;
    json fl = flag_links_all(b->x, threads, flag_ok);
    auto ge = gamma_edge_certificate(b->spec, b->x, threads);
    bool inst = lt.ok && flag_ok && ge.ok && ge.min_gamma_girth >= 6;
    all = all && inst;
    json inst_j{{"link_table_ok", lt.ok},
                {"flag", fl},
                {"edge_links", ge.to_json()},
                {"ok", inst}};
    d[b == &x24_cached() ? "from_24_vertex_graph" : "from_arithmetic_9_graph"] = inst_j;
  }
  r.pass = all;
  r.details = std::move(d);
  return r;
}

CriterionResult c6_not_f3(int threads) {
  CriterionResult r{6, criterion_name(6), false, {}};
  auto r24 = not_f3_certificate(x24_cached().spec, x24_cached().x, threads);
  auto r9 = not_f3_certificate(x9_cached().spec, x9_cached().x, threads);
  // every sizeable point-line deletion of PG(2,3) is an incident pair (45
  // edges), so one defining subgraph carries a cycle and some type 2 links
  // are suspensions with nonzero H2; reported as computed
  r.pass = r24.ok && r9.ok && r24.type2_all_trivial;
  r.details = json{{"from_24_vertex_graph", r24.to_json()},
                   {"from_arithmetic_9_graph", r9.to_json()},
                   {"certificates_ok", r24.ok && r9.ok},
                   {"type2_trivial_on_24", r24.type2_all_trivial}};
  return r;
}

LinkComplex discrete_join(int q1, int q2, int q3) {
  LinkComplex l;
  const int q[3] = {q1, q2, q3};
  std::vector<int> base(3, 0);
  for (int c = 0; c < 3; ++c) {
    base[c] = static_cast<int>(l.verts.size());
    for (int i = 0; i < q[c]; ++i) l.verts.push_back({c, i, 0});
  }
  for (int c = 0; c < 3; ++c)
    for (int cc = c + 1; cc < 3; ++cc)
      for (int i = 0; i < q[c]; ++i)
        for (int j = 0; j < q[cc]; ++j) l.edges.emplace_back(base[c] + i, base[cc] + j);
  for (int i = 0; i < q[0]; ++i)
    for (int j = 0; j < q[1]; ++j)
      for (int k = 0; k < q[2]; ++k)
        l.triangles.push_back({base[0] + i, base[1] + j, base[2] + k});
  std::sort(l.edges.begin(), l.edges.end());
  l.validate();
  return l;
}

CriterionResult c7_join_homology(int threads) {
  CriterionResult r{7, criterion_name(7), false, {}};
  (void)threads;
  long long checked = 0;
  json first_bad;
  bool all = true;
  for (int q1 = 1; q1 <= 5 && all; ++q1)
    for (int q2 = 1; q2 <= 5 && all; ++q2)
      for (int q3 = 1; q3 <= 5 && all; ++q3) {
        LinkComplex l = discrete_join(q1, q2, q3);
        auto h = reduced_homology(l);
        const long long want2 = static_cast<long long>(q1 - 1) * (q2 - 1) * (q3 - 1);
        // independent route: Betti numbers from rational ranks
        int r1 = rank_rational(boundary_1(l));
        int r2 = rank_rational(boundary_2(l));
        long long b0 = static_cast<long long>(l.verts.size()) - 1 - r1;
        long long b1 = static_cast<long long>(l.edges.size()) - r1 - r2;
        long long b2 = static_cast<long long>(l.triangles.size()) - r2;
        bool ok = h.rank[0] == 0 && h.rank[1] == 0 && h.rank[2] == want2 && b0 == 0 && b1 == 0 &&
                  b2 == want2 && h.torsion[0].empty() && h.torsion[1].empty() &&
                  h.torsion[2].empty();
        ++checked;
        if (!ok) {
          all = false;
          first_bad = json{{"q", {q1, q2, q3}},
                           {"smith", h.to_json()},
                           {"rational", {b0, b1, b2}},
                           {"expected_b2", want2}};
        }
      }
  r.pass = all;
  r.details = json{{"triples_checked", checked}};
  if (!all) r.details["first_failure"] = first_bad;
  return r;
}

CriterionResult c8_branched(int threads) {
  CriterionResult r{8, criterion_name(8), false, {}};
  json d;
  Graph cage = cage_graph(5);
  ProductComplex k = ProductComplex::full_product(cage, cage, cage);
  auto locus = branching_locus(cage, cage, cage);
  auto lv = validate_locus(k, locus, threads);
  d["locus_validation"] = lv.to_json();

  auto scheme = build_labeling(cage, cage, choose_q(cage, cage));
  auto hol = loop4_holonomy_check(cage, cage, scheme);
  bool label_ok = scheme.q == 5 && scheme.l == 2 && hol.ok && hol.loops_checked == 36;
  d["labeling"] = scheme.to_json();
  d["holonomy"] = hol.to_json();

  bool formula_ok = true;
  json evals = json::array();
  for (long long p : {5, 7, 11}) {
    Graph c = cage_graph(static_cast<int>(p));
    auto params = EulerParams::from_graphs(c, c, c, p, p, p);
    long long got = euler_formula_branched(params);
    long long want = p * p * (9 + 15 * p - 24 * p * p + 9 * p * p * p - p * p * p * p);
    formula_ok = formula_ok && got == want;
    evals.push_back(json{{"p", p}, {"formula", got}, {"printed_polynomial", want}});
  }
  d["polynomial_evaluations"] = evals;

  auto census = euler_cell_census(cage, cage, cage, EulerParams::from_graphs(cage, cage, cage, 5, 5, 5));
  bool census_ok = census.match || census.discrepancy_isolated;
  d["census"] = census.to_json();

  r.pass = lv.ok && label_ok && formula_ok && census_ok;
  r.details = std::move(d);
  return r;
}

CriterionResult c9_random_c4(int threads) {
  CriterionResult r{9, criterion_name(9), false, {}};
  auto exact = expected_c4(4);
  auto mc = monte_carlo_c4(4, 100000, kReproSeed, threads);
  double dev = mc.mean - exact.value();
  if (dev < 0) dev = -dev;
  r.pass = dev <= 3.0 * mc.std_error;
  r.details = json{{"expected", exact.value()},
                   {"mean", mc.mean},
                   {"std_error", mc.std_error},
                   {"trials", mc.trials},
                   {"seed", kReproSeed},
                   {"within_3_se", r.pass}};
  return r;
}

}  // namespace

const char* criterion_name(int number) {
  switch (number) {
    case 1: return "24-vertex minimal sizeable graph";
    case 2: return "no sizeable partition at 23 vertices";
    case 3: return "arithmetic minimum at 36 vertices";
    case 4: return "euler characteristic formula vs direct count";
    case 5: return "curvature and hyperbolicity certificates";
    case 6: return "finitely-presented-not-F3 certificates";
    case 7: return "join homology oracle";
    case 8: return "branched cover bookkeeping";
    case 9: return "random 4-cycle expectation";
    default: throw std::invalid_argument("criterion number out of range");
  }
}

CriterionResult run_criterion(int number, int threads) {
  switch (number) {
    case 1: return c1_minimal24(threads);
    case 2: return c2_refute23(threads);
    case 3: return c3_arithmetic36(threads);
    case 4: return c4_euler(threads);
    case 5: return c5_curvature(threads);
    case 6: return c6_not_f3(threads);
    case 7: return c7_join_homology(threads);
    case 8: return c8_branched(threads);
    case 9: return c9_random_c4(threads);
    default: throw std::invalid_argument("criterion number out of range");
  }
}

std::vector<CriterionResult> run_all_criteria(
    int threads, const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int k = 1; k <= kCriterionCount; ++k) {
    out.push_back(run_criterion(k, threads));
    if (progress) progress(out.back());
  }
  return out;
}

}  // namespace cubforge
