#pragma once

// Point-line incidence graphs of the projective planes PG(2, q), q prime.
// Points are the 1-dimensional subspaces of F_q^3, lines the 2-dimensional
// ones; a point lies on a line when their normal forms are orthogonal.

#include "cubforge/graph.hpp"

namespace cubforge {

// Side A holds the q^2+q+1 points, side B the lines, in a fixed canonical
// order (lex-least representative of each class).  No part tags.
// Throws for non-prime q.
Graph pg_incidence(int q);

bool is_prime(int q);

}  // namespace cubforge
