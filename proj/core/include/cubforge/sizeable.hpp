#pragma once

// Sizeable graphs: simple bipartite 4-cycle-free graphs on A and B sides,
// each side split into parts 0/1 so that all four induced subgraphs on
// A^s u B^t are non-empty and connected.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubforge/graph.hpp"

namespace cubforge {

// Part assignment for every vertex; sides come from the graph tags.
class SizeablePartition {
 public:
  SizeablePartition() = default;
  explicit SizeablePartition(std::vector<int> part_of) : part_of_(std::move(part_of)) {}
  // Reads part tags off the graph.  Throws if any vertex is untagged.
  static SizeablePartition from_tags(const Graph& g);

  int part(int v) const { return part_of_.at(v); }
  int size() const { return static_cast<int>(part_of_.size()); }
  const std::vector<int>& parts() const { return part_of_; }

  // Vertices of side s, part t, sorted.
  std::vector<int> block(const Graph& g, Side s, int t) const;

  // Swap-normalized key: part 0 contains the least vertex of each side.
  std::vector<int> normalized(const Graph& g) const;

 private:
  std::vector<int> part_of_;
};

enum class SizeableCheck {
  partition_valid,
  parts_nonempty,
  crossing,
  simple,
  four_cycle_free,
  connected_00,
  connected_01,
  connected_10,
  connected_11,
};

struct SizeableFailure {
  SizeableCheck check;
  nlohmann::json witness;  // offending edge, cycle, component split, ...
};

struct SizeableReport {
  bool verdict = false;
  std::vector<SizeableFailure> failures;
  nlohmann::json to_json() const;
};

// Full check in a fixed order; collects all failures, first one is decisive.
// Throws std::invalid_argument if the partition does not cover the vertex set.
SizeableReport verify_sizeable(const Graph& g, const SizeablePartition& p);

// Double counting of A0 x A1 pairs through B vertices, plus the two size
// inequalities behind the lower bound proofs.
struct DegreeBoundReport {
  long long sum_de_via_b = 0;     // sum over B of deg_into_A0 * deg_into_A1
  long long sum_de_via_a = 0;     // dual, through A vertices
  long long a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  bool pair_count_ok_b = false;   // sum_de_via_b <= a0*a1
  bool pair_count_ok_a = false;
  bool raw_ineq_a = false;        // a0*a1 >= 2(a0+a1) + (b0+b1) - 4
  bool raw_ineq_b = false;
  bool general_ineq_small_side = false;  // (x0-3)(x1-3) >= 5 on the smaller side
  bool paths_ineq_small_side = false;    // (x0-4)(x1-4) >= 8 on the smaller side
  nlohmann::json to_json() const;
};

DegreeBoundReport degree_pair_bounds(const Graph& g, const SizeablePartition& p);
// Size-only variant: evaluates the two inequalities for given part sizes.
DegreeBoundReport degree_pair_bounds(long long a0, long long a1, long long b0, long long b1);

const char* to_string(SizeableCheck c);

}  // namespace cubforge
