#pragma once

// Largest edge counts of 4-cycle-free bipartite graphs on given side sizes.

#include <optional>

#include "cubforge/graph.hpp"

namespace cubforge {

// n^2(n+1) + c*n for side sizes derived from a projective plane of order n;
// c = 0 gives the plane on (n^2+n+1, n^2+n+1).
long long zarankiewicz_formula(long long n, long long c);

// Stored exact values for the side sizes used here; nullopt when unknown.
std::optional<long long> zarankiewicz_bound(int m, int n);

// True when g (bipartite, simple, C4-free) meets its stored bound exactly;
// throws when no bound is stored for its side sizes.
bool zarankiewicz_table_check(const Graph& g);

}  // namespace cubforge
