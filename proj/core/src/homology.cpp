#include "cubforge/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace cubforge {

using nlohmann::json;

namespace {

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in SNF");
  return r;
}

long long checked_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in SNF");
  return r;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult res;
  int t = 0;
  const int limit = std::min(m.rows, m.cols);
  while (t < limit) {
    // smallest magnitude nonzero pivot in the trailing block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        long long v = std::llabs(m.at(i, j));
        if (v != 0 && (pi == -1 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;
    if (pi != t)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    if (pj != t)
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        long long q = m.at(i, t) / m.at(t, t);
        for (int j = t; j < m.cols; ++j)
          m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(t, j)));
        if (m.at(i, t) != 0) {  // remainder smaller than pivot, swap and restart
          for (int j = t; j < m.cols; ++j) std::swap(m.at(t, j), m.at(i, j));
          dirty = true;
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        long long q = m.at(t, j) / m.at(t, t);
        for (int i = t; i < m.rows; ++i)
          m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(i, t)));
        if (m.at(t, j) != 0) {
          for (int i = t; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          dirty = true;
        }
      }
    }
    // force divisibility of the trailing block by the pivot
    bool fixed = false;
    for (int i = t + 1; i < m.rows && !fixed; ++i)
      for (int j = t + 1; j < m.cols && !fixed; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          for (int jj = t; jj < m.cols; ++jj)
            m.at(t, jj) = checked_sub(m.at(t, jj), checked_mul(-1, m.at(i, jj)));
          fixed = true;
        }
    if (fixed) continue;  // redo elimination at the same t
    ++t;
  }
  for (int i = 0; i < t; ++i) res.factors.push_back(std::llabs(m.at(i, i)));
  return res;
}

int rank_rational(IntMatrix m) {
  // Bareiss fraction-free elimination.
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col) != 0) { pivot = i; break; }
    if (pivot == -1) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = col + 1; j < m.cols; ++j) {
        long long num = checked_sub(checked_mul(m.at(rank, col), m.at(i, j)),
                                    checked_mul(m.at(i, col), m.at(rank, j)));
        m.at(i, j) = num / prev;  // divides exactly (Bareiss)
      }
      m.at(i, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

IntMatrix boundary_1(const LinkComplex& l) {
  IntMatrix m(static_cast<int>(l.verts.size()), static_cast<int>(l.edges.size()));
  for (int e = 0; e < m.cols; ++e) {
    auto [u, v] = l.edges[e];
    if (u > v) std::swap(u, v);
    m.at(u, e) = -1;
    m.at(v, e) = 1;
  }
  return m;
}

IntMatrix boundary_2(const LinkComplex& l) {
  std::map<std::pair<int, int>, int> edge_index;
  for (int e = 0; e < static_cast<int>(l.edges.size()); ++e) {
    auto [u, v] = l.edges[e];
    if (u > v) std::swap(u, v);
    edge_index[{u, v}] = e;
  }
  IntMatrix m(static_cast<int>(l.edges.size()), static_cast<int>(l.triangles.size()));
  for (int t = 0; t < m.cols; ++t) {
    auto tri = l.triangles[t];
    std::sort(tri.begin(), tri.end());
    // d[v0,v1,v2] = [v1,v2] - [v0,v2] + [v0,v1]
    m.at(edge_index.at({tri[1], tri[2]}), t) = 1;
    m.at(edge_index.at({tri[0], tri[2]}), t) = -1;
    m.at(edge_index.at({tri[0], tri[1]}), t) = 1;
  }
  return m;
}

json HomologyProfile::to_json() const {
  if (empty) return {{"empty", true}};
  json out = json::object();
  const char* names[3] = {"h0", "h1", "h2"};
  for (int d = 0; d < 3; ++d)
    out[names[d]] = {{"rank", rank[d]}, {"torsion", torsion[d]}};
  return out;
}

HomologyProfile reduced_homology(const LinkComplex& l) {
  l.validate();
  HomologyProfile p;
  const long long n0 = l.count(0), n1 = l.count(1), n2 = l.count(2);
  if (n0 == 0) {
    p.empty = true;
    return p;
  }
  auto s1 = smith_normal_form(boundary_1(l));
  auto s2 = smith_normal_form(boundary_2(l));
  const long long r1 = s1.rank(), r2 = s2.rank();
  p.rank[0] = n0 - 1 - r1;
  p.rank[1] = (n1 - r1) - r2;
  p.rank[2] = n2 - r2;
  // torsion of H0 comes from d1's factors, of H1 from d2's; top dimension free
  for (long long f : s1.factors)
    if (f > 1) p.torsion[0].push_back(f);
  for (long long f : s2.factors)
    if (f > 1) p.torsion[1].push_back(f);
  return p;
}

}  // namespace cubforge
