#pragma once

// Arithmetic graphs on Z/n: four blocks A0, A1, B0, B1 of size n, with
// a_s^i joined to b_t^(i+h[s][t]) and b_t^(i+k[s][t]) for all s, t, i.

#include <array>
#include <vector>

#include "cubforge/graph.hpp"
#include "cubforge/sizeable.hpp"

namespace cubforge {

struct ArithmeticParams {
  int n = 0;
  // h[s][t], k[s][t] as residues mod n.
  std::array<std::array<int, 2>, 2> h{};
  std::array<std::array<int, 2>, 2> k{};

  bool operator==(const ArithmeticParams&) const = default;
};

// The published 36-vertex instance (n = 9).
ArithmeticParams arithmetic_example_9();

// Vertex layout: A0 = [0,n), A1 = [n,2n), B0 = [2n,3n), B1 = [3n,4n),
// side and part tags set accordingly.  Throws when some h[s][t] == k[s][t]
// mod n (the pair would create parallel edges by construction).
Graph arithmetic_graph(const ArithmeticParams& params);

// Canonical partition of an arithmetic graph: parts as laid out above.
SizeablePartition arithmetic_partition(const ArithmeticParams& params);

// Exhaustive scan over the normalized parameter space
// h = ((0,0),(0,-d)), k = ((a,c),(-b,-e)) with a,b,c nonzero and d != e,
// keeping the tuples whose graph is sizeable with the canonical partition.
// Empty for n <= 8.
std::vector<ArithmeticParams> search_arithmetic(int n);

}  // namespace cubforge
