#include "cubforge/zarankiewicz.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cubforge {

long long zarankiewicz_formula(long long n, long long c) {
  if (n < 1) throw std::invalid_argument("zarankiewicz_formula needs n >= 1");
  if (c < 0) throw std::invalid_argument("zarankiewicz_formula needs c >= 0");
  return n * n * (n + 1) + c * n;
}

std::optional<long long> zarankiewicz_bound(int m, int n) {
  if (m > n) std::swap(m, n);
  struct Row { int m, n; long long z; };
  // Exact values; the (12,12) row extends the published strip so that
  // one-point-one-line deletions of the order 3 plane can be checked too.
  static constexpr Row table[] = {
      {7, 15, 33}, {8, 14, 35}, {9, 13, 37}, {10, 12, 39},
      {11, 11, 39}, {11, 12, 42}, {12, 12, 45},
  };
  for (const auto& r : table)
    if (r.m == m && r.n == n) return r.z;
  return std::nullopt;
}

bool zarankiewicz_table_check(const Graph& g) {
  int m = static_cast<int>(g.vertices_with(Side::A).size());
  int n = static_cast<int>(g.vertices_with(Side::B).size());
  auto bound = zarankiewicz_bound(m, n);
  if (!bound)
    throw std::invalid_argument("no stored bound for sides (" + std::to_string(m) + "," +
                                std::to_string(n) + ")");
  return g.edge_count() <= *bound;
}

}  // namespace cubforge
