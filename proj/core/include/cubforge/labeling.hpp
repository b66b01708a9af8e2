#pragma once

// Permutation labelings of the retract graphs: powers of a q-cycle on one
// graph, powers of a conjugator on the other, with distinct labels into every
// vertex, and the holonomy check that every 8-loop around a removed corner
// acts as a q-cycle.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubforge/graph.hpp"

namespace cubforge {

// Permutations of {0..q-1} as images; compose(p, r) applies p first.
using Perm = std::vector<int>;
Perm perm_identity(int q);
Perm perm_compose(const Perm& p, const Perm& r);
Perm perm_inverse(const Perm& p);
Perm perm_power(const Perm& p, long long k);  // k may be negative
bool perm_is_full_cycle(const Perm& p);

// x -> x + 1 and x -> l * x mod q.
Perm perm_alpha(int q);
Perm perm_beta(int q, int l);

bool is_primitive_root(int l, int q);  // q prime
int least_primitive_root(int q);

// Least prime above every vertex degree of the two graphs.
int choose_q(const Graph& gi, const Graph& gj);

struct LabelingScheme {
  int q = 0;
  int l = 0;  // least primitive root mod q
  // Exponent per edge, read in the A -> B direction; the reverse direction
  // negates.  alpha powers on gi, beta powers on gj.
  std::vector<int> alpha_exp, beta_exp;
  nlohmann::json to_json() const;
};

// Realizes the labels by proper edge colorings of the two bipartite
// multigraphs; throws unless q is prime and above both maximum degrees.
LabelingScheme build_labeling(const Graph& gi, const Graph& gj, int q);

// Distinct exponents into every vertex, q large enough, and the conjugation
// relation beta alpha beta^-1 = alpha^l checked by composition.
bool labeling_ok(const Graph& gi, const Graph& gj, const LabelingScheme& s);

// n (l^m - 1) mod q: the exponent of the commutator of beta^-m and alpha^-n.
int commutator_exponent(long long m, long long n, int l, int q);

struct HolonomyReport {
  bool ok = false;
  long long removed_corners = 0;  // A x B vertex pairs walked around
  long long loops_checked = 0;
  bool exponents_match = true;  // permutation route equals the exponent route
  struct Failure {
    int a, b;          // the removed corner
    int ei, ei2;       // edge pair at a
    int ej, ej2;       // edge pair at b
  };
  std::optional<Failure> failure;
  std::string reason;
  nlohmann::json to_json() const;
};

// Walks the 8-loop around every removed corner for every pair of edges at its
// two endpoints, composing the actual permutations, and checks the result is
// a q-cycle equal to the predicted power of alpha.
HolonomyReport loop4_holonomy_check(const Graph& gi, const Graph& gj, const LabelingScheme& s);

}  // namespace cubforge
