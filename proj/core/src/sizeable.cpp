#include "cubforge/sizeable.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubforge {

using nlohmann::json;

SizeablePartition SizeablePartition::from_tags(const Graph& g) {
  std::vector<int> parts(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    int p = g.part(v);
    if (p != 0 && p != 1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no part tag");
    parts[v] = p;
  }
  return SizeablePartition(std::move(parts));
}

std::vector<int> SizeablePartition::block(const Graph& g, Side s, int t) const {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.side(v) == s && part(v) == t) out.push_back(v);
  return out;
}

std::vector<int> SizeablePartition::normalized(const Graph& g) const {
  std::vector<int> out = part_of_;
  for (Side s : {Side::A, Side::B}) {
    auto verts = g.vertices_with(s);
    if (verts.empty()) continue;
    int anchor = *std::min_element(verts.begin(), verts.end());
    if (out[anchor] == 1)
      for (int v : verts) out[v] ^= 1;
  }
  return out;
}

const char* to_string(SizeableCheck c) {
  switch (c) {
    case SizeableCheck::partition_valid: return "partition-valid";
    case SizeableCheck::parts_nonempty: return "parts-nonempty";
    case SizeableCheck::crossing: return "crossing";
    case SizeableCheck::simple: return "simple";
    case SizeableCheck::four_cycle_free: return "four-cycle-free";
    case SizeableCheck::connected_00: return "connected-A0-B0";
    case SizeableCheck::connected_01: return "connected-A0-B1";
    case SizeableCheck::connected_10: return "connected-A1-B0";
    case SizeableCheck::connected_11: return "connected-A1-B1";
  }
  return "?";
}

json SizeableReport::to_json() const {
  json fs = json::array();
  for (const auto& f : failures)
    fs.push_back({{"check", to_string(f.check)}, {"witness", f.witness}});
  return {{"verdict", verdict}, {"failures", fs}};
}

static SizeableCheck connect_check(int s, int t) {
  if (s == 0) return t == 0 ? SizeableCheck::connected_00 : SizeableCheck::connected_01;
  return t == 0 ? SizeableCheck::connected_10 : SizeableCheck::connected_11;
}

SizeableReport verify_sizeable(const Graph& g, const SizeablePartition& p) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("partition does not cover the vertex set");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.side(v) == Side::none)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no side tag");
    if (p.part(v) != 0 && p.part(v) != 1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no part assignment");
  }

  SizeableReport rep;
  for (Side s : {Side::A, Side::B})
    for (int t : {0, 1})
      if (p.block(g, s, t).empty())
        rep.failures.push_back({SizeableCheck::parts_nonempty,
                                json{{"side", to_string(s)}, {"part", t}}});

  for (const auto& [u, v] : g.edges()) {
    if (g.side(u) == g.side(v)) {
      rep.failures.push_back({SizeableCheck::crossing, json{{"edge", {u, v}}}});
      break;
    }
  }

  if (auto pp = g.parallel_pair())
    rep.failures.push_back({SizeableCheck::simple,
                            json{{"edges", {pp->first, pp->second}},
                                 {"endpoints", {g.edge(pp->first).first, g.edge(pp->first).second}}}});

  if (auto cyc = g.find_four_cycle())
    rep.failures.push_back({SizeableCheck::four_cycle_free, json{{"cycle", cyc->vertices}}});

  for (int s : {0, 1}) {
    for (int t : {0, 1}) {
      auto as = p.block(g, Side::A, s);
      auto bt = p.block(g, Side::B, t);
      std::vector<int> sub = as;
      sub.insert(sub.end(), bt.begin(), bt.end());
      if (sub.empty()) continue;  // already reported as an empty part
      auto comps = g.components_within(sub);
      if (comps.size() != 1) {
        json jcomps = json::array();
        for (const auto& c : comps) jcomps.push_back(c);
        rep.failures.push_back({connect_check(s, t), json{{"components", jcomps}}});
      }
    }
  }

  rep.verdict = rep.failures.empty();
  return rep;
}

json DegreeBoundReport::to_json() const {
  return {{"sum_de_via_b", sum_de_via_b},
          {"sum_de_via_a", sum_de_via_a},
          {"sizes", {{"a0", a0}, {"a1", a1}, {"b0", b0}, {"b1", b1}}},
          {"pair_count_ok_b", pair_count_ok_b},
          {"pair_count_ok_a", pair_count_ok_a},
          {"raw_ineq_a", raw_ineq_a},
          {"raw_ineq_b", raw_ineq_b},
          {"general_ineq_small_side", general_ineq_small_side},
          {"paths_ineq_small_side", paths_ineq_small_side}};
}

DegreeBoundReport degree_pair_bounds(long long a0, long long a1, long long b0, long long b1) {
  DegreeBoundReport r;
  r.a0 = a0; r.a1 = a1; r.b0 = b0; r.b1 = b1;
  r.raw_ineq_a = a0 * a1 >= 2 * (a0 + a1) + (b0 + b1) - 4;
  r.raw_ineq_b = b0 * b1 >= 2 * (b0 + b1) + (a0 + a1) - 4;
  long long x0 = a0, x1 = a1;
  if (b0 + b1 < a0 + a1) { x0 = b0; x1 = b1; }
  r.general_ineq_small_side = (x0 - 3) * (x1 - 3) >= 5;
  r.paths_ineq_small_side = (x0 - 4) * (x1 - 4) >= 8;
  return r;
}

DegreeBoundReport degree_pair_bounds(const Graph& g, const SizeablePartition& p) {
  auto a0 = p.block(g, Side::A, 0), a1 = p.block(g, Side::A, 1);
  auto b0 = p.block(g, Side::B, 0), b1 = p.block(g, Side::B, 1);
  DegreeBoundReport r = degree_pair_bounds(a0.size(), a1.size(), b0.size(), b1.size());
  auto count_through = [&](const std::vector<int>& through, Side opposite) {
    long long total = 0;
    for (int v : through) {
      long long d0 = 0, d1 = 0;
      for (const auto& ie : g.incident(v)) {
        if (g.side(ie.to) != opposite) continue;
        (p.part(ie.to) == 0 ? d0 : d1)++;
      }
      total += d0 * d1;
    }
    return total;
  };
  std::vector<int> bs = b0;
  bs.insert(bs.end(), b1.begin(), b1.end());
  std::vector<int> as = a0;
  as.insert(as.end(), a1.begin(), a1.end());
  r.sum_de_via_b = count_through(bs, Side::A);
  r.sum_de_via_a = count_through(as, Side::B);
  r.pair_count_ok_b = r.sum_de_via_b <= r.a0 * r.a1;
  r.pair_count_ok_a = r.sum_de_via_a <= r.b0 * r.b1;
  return r;
}

}  // namespace cubforge
