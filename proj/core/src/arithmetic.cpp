#include "cubforge/arithmetic.hpp"

#include <stdexcept>
#include <string>

namespace cubforge {

static int mod(int x, int n) {
  int r = x % n;
  return r < 0 ? r + n : r;
}

ArithmeticParams arithmetic_example_9() {
  ArithmeticParams p;
  p.n = 9;
  p.h = {{{0, 0}, {0, mod(-1, 9)}}};
  p.k = {{{mod(-1, 9), 2}, {2, mod(-2, 9)}}};
  return p;
}

Graph arithmetic_graph(const ArithmeticParams& params) {
  const int n = params.n;
  if (n < 1) throw std::invalid_argument("arithmetic graph needs n >= 1");
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      if (mod(params.h[s][t], n) == mod(params.k[s][t], n))
        throw std::invalid_argument("h[" + std::to_string(s) + "][" + std::to_string(t) +
                                    "] == k mod n, pair would be parallel");

  Graph g;
  auto name = [](char side, int part, int i) {
    return std::string(1, side) + std::to_string(part) + "_" + std::to_string(i);
  };
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < n; ++i) g.add_vertex({Side::A, s, name('a', s, i)});
  for (int t = 0; t < 2; ++t)
    for (int i = 0; i < n; ++i) g.add_vertex({Side::B, t, name('b', t, i)});

  auto a_id = [n](int s, int i) { return s * n + i; };
  auto b_id = [n](int t, int i) { return 2 * n + t * n + i; };
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int i = 0; i < n; ++i) {
        g.add_edge(a_id(s, i), b_id(t, mod(i + params.h[s][t], n)));
        g.add_edge(a_id(s, i), b_id(t, mod(i + params.k[s][t], n)));
      }
  return g;
}

SizeablePartition arithmetic_partition(const ArithmeticParams& params) {
  const int n = params.n;
  std::vector<int> parts(4 * n);
  for (int i = 0; i < 4 * n; ++i) parts[i] = (i / n) % 2;
  return SizeablePartition(std::move(parts));
}

std::vector<ArithmeticParams> search_arithmetic(int n) {
  std::vector<ArithmeticParams> hits;
  if (n < 1) throw std::invalid_argument("search_arithmetic needs n >= 1");
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            if (d == e) continue;
            ArithmeticParams p;
            p.n = n;
            p.h = {{{0, 0}, {0, mod(-d, n)}}};
            p.k = {{{a, c}, {mod(-b, n), mod(-e, n)}}};
            Graph g = arithmetic_graph(p);
            if (verify_sizeable(g, arithmetic_partition(p)).verdict)
              hits.push_back(p);
          }
  return hits;
}

}  // namespace cubforge
