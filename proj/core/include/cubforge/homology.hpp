#pragma once

// Exact integral homology of dimension <= 2 simplicial complexes via Smith
// normal form.  Matrices stay small (links have at most a few hundred
// cells), so naive SNF with magnitude pivoting is plenty; all arithmetic is
// overflow-checked 64-bit.

#include <vector>

#include <json.hpp>

#include "cubforge/cubical.hpp"

namespace cubforge {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;  // row-major
  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Invariant factors d1 | d2 | ... (positive), plus the rank.
struct SmithResult {
  std::vector<long long> factors;
  int rank() const { return static_cast<int>(factors.size()); }
};

SmithResult smith_normal_form(IntMatrix m);

// Rank over the rationals by fraction-free elimination; an independent route
// used to cross-check the SNF ranks.
int rank_rational(IntMatrix m);

// Boundary operators of a LinkComplex with ascending-vertex orientation.
IntMatrix boundary_1(const LinkComplex& l);
IntMatrix boundary_2(const LinkComplex& l);

struct HomologyProfile {
  bool empty = false;                       // no cells at all (H reduced of S^-1)
  long long rank[3] = {0, 0, 0};            // reduced Betti numbers b0, b1, b2
  std::vector<long long> torsion[3];        // invariant factors > 1 per dimension
  bool trivial() const {
    return !empty && rank[0] == 0 && rank[1] == 0 && rank[2] == 0 && torsion[0].empty() &&
           torsion[1].empty() && torsion[2].empty();
  }
  bool operator==(const HomologyProfile&) const = default;
  nlohmann::json to_json() const;
};

HomologyProfile reduced_homology(const LinkComplex& l);

}  // namespace cubforge
