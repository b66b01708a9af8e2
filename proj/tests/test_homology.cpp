#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "cubforge/homology.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("homology");

namespace {

// Simplicial complex on dummy link vertices with every face of the given
// triangles filled in, plus optional extra edges.
LinkComplex from_faces(int nverts, std::vector<std::array<int, 3>> faces,
                       std::vector<std::pair<int, int>> extra_edges = {}) {
  LinkComplex l;
  for (int i = 0; i < nverts; ++i) l.verts.push_back({i, 0, 0});
  std::vector<std::pair<int, int>> edges = std::move(extra_edges);
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    edges.emplace_back(f[0], f[1]);
    edges.emplace_back(f[0], f[2]);
    edges.emplace_back(f[1], f[2]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  l.edges = std::move(edges);
  std::sort(faces.begin(), faces.end());
  l.triangles = std::move(faces);
  l.validate();
  return l;
}

LinkComplex octahedron() {
  // antipodal pairs (0,1), (2,3), (4,5); one corner from each pair per face
  std::vector<std::array<int, 3>> faces;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) faces.push_back({a, b, c});
  return from_faces(6, faces);
}

LinkComplex projective_plane() {
  // 6-vertex triangulation: complete 1-skeleton, every edge in two faces
  return from_faces(6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
}

LinkComplex torus7() {
  // cyclic 7-vertex triangulation: faces {i, i+1, i+3} and {i, i+2, i+3}
  std::vector<std::array<int, 3>> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return from_faces(7, faces);
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k)
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
  return z;
}

}  // namespace

TEST_CASE("smith normal form") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 6;
  m.at(1, 1) = 8;
  auto s = smith_normal_form(m);
  CHECK(s.factors == std::vector<long long>{2, 4});
  CHECK(s.rank() == 2);
  CHECK(rank_rational(m) == 2);

  IntMatrix z(3, 2);
  CHECK(smith_normal_form(z).rank() == 0);
  CHECK(rank_rational(z) == 0);
}

TEST_CASE("boundary operators compose to zero") {
  for (const auto& l : {octahedron(), projective_plane(), torus7()}) {
    auto d1 = boundary_1(l);
    auto d2 = boundary_2(l);
    CHECK(d1.cols == d2.rows);
    auto prod = multiply(d1, d2);
    for (long long v : prod.a) CHECK(v == 0);
    // the two rank routes agree
    CHECK(smith_normal_form(d1).rank() == rank_rational(d1));
    CHECK(smith_normal_form(d2).rank() == rank_rational(d2));
  }
}

TEST_CASE("reduced homology of model spaces") {
  SUBCASE("sphere") {
    auto h = reduced_homology(octahedron());
    CHECK(h.rank[0] == 0);
    CHECK(h.rank[1] == 0);
    CHECK(h.rank[2] == 1);
    for (int d = 0; d < 3; ++d) CHECK(h.torsion[d].empty());
    CHECK(!h.trivial());
    CHECK(h.to_json()["h2"]["rank"] == 1);
  }
  SUBCASE("circle") {
    auto h = reduced_homology(from_faces(3, {}, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(h.rank[0] == 0);
    CHECK(h.rank[1] == 1);
    CHECK(h.rank[2] == 0);
  }
  SUBCASE("two points") {
    auto h = reduced_homology(from_faces(2, {}));
    CHECK(h.rank[0] == 1);
    CHECK(h.rank[1] == 0);
  }
  SUBCASE("projective plane has 2-torsion in degree one") {
    auto l = projective_plane();
    CHECK(l.count(1) == 15);
    auto h = reduced_homology(l);
    CHECK(h.rank[0] == 0);
    CHECK(h.rank[1] == 0);
    CHECK(h.rank[2] == 0);
    CHECK(h.torsion[1] == std::vector<long long>{2});
    CHECK(h.torsion[2].empty());
    CHECK(!h.trivial());
  }
  SUBCASE("torus") {
    auto l = torus7();
    CHECK(l.count(1) == 21);
    auto h = reduced_homology(l);
    CHECK(h.rank[0] == 0);
    CHECK(h.rank[1] == 2);
    CHECK(h.rank[2] == 1);
    for (int d = 0; d < 3; ++d) CHECK(h.torsion[d].empty());
  }
  SUBCASE("cone is trivial") {
    // a single filled triangle
    auto h = reduced_homology(from_faces(3, {{0, 1, 2}}));
    CHECK(h.trivial());
  }
  SUBCASE("empty complex is flagged") {
    LinkComplex e;
    auto h = reduced_homology(e);
    CHECK(h.empty);
    CHECK(!h.trivial());
  }
}

TEST_SUITE_END();
