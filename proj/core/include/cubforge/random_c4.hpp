#pragma once

// Expected 4-cycle count in a random bipartite graph with sides 2n and edge
// probability 2/n, and a seeded Monte Carlo estimate of the same quantity.

#include <cstdint>

namespace cubforge {

// (1 - 1/(2n))^2 * 64 as an exact rational; throws for n < 2.
struct Rational64 {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Rational64 expected_c4(int n);

struct MonteCarloC4 {
  double mean = 0;
  double std_error = 0;
  long long trials = 0;
};

// Counts subgraphs isomorphic to a 4-cycle per trial.  Per-trial streams are
// derived from (seed, trial index), so the result does not depend on how
// trials are scheduled.
MonteCarloC4 monte_carlo_c4(int n, long long trials, std::uint64_t seed, int threads = 0);

}  // namespace cubforge
