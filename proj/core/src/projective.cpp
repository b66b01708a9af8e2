#include "cubforge/projective.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubforge {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Canonical projective representatives over F_q: first nonzero coordinate 1,
// enumerated as (1,*,*), (0,1,*), (0,0,1) in lex order.
static std::vector<std::array<int, 3>> projective_points(int q) {
  std::vector<std::array<int, 3>> pts;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  return pts;
}

Graph pg_incidence(int q) {
  if (!is_prime(q)) throw std::invalid_argument("pg_incidence: " + std::to_string(q) + " is not prime");
  auto reps = projective_points(q);
  const int m = static_cast<int>(reps.size());  // q^2 + q + 1

  Graph g;
  for (int i = 0; i < m; ++i) {
    const auto& p = reps[i];
    g.add_vertex({Side::A, kNoPart,
                  "p(" + std::to_string(p[0]) + ":" + std::to_string(p[1]) + ":" + std::to_string(p[2]) + ")"});
  }
  for (int i = 0; i < m; ++i) {
    const auto& l = reps[i];
    g.add_vertex({Side::B, kNoPart,
                  "l[" + std::to_string(l[0]) + ":" + std::to_string(l[1]) + ":" + std::to_string(l[2]) + "]"});
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot += reps[i][c] * reps[j][c];
      if (dot % q == 0) g.add_edge(i, m + j);
    }
  return g;
}

}  // namespace cubforge
