#include "cubforge/random_c4.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cubforge/parallel.hpp"

namespace cubforge {

Rational64 expected_c4(int n) {
  if (n < 2) throw std::invalid_argument("expected_c4 needs n >= 2 (edge probability 2/n)");
  // (1 - 1/(2n))^2 * 64 = 16 (2n-1)^2 / n^2
  long long num = 16LL * (2 * n - 1) * (2 * n - 1);
  long long den = static_cast<long long>(n) * n;
  long long g = std::gcd(num, den);
  return {num / g, den / g};
}

namespace {

// splitmix64, used to give every trial its own stream.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Xoshiro {
  std::uint64_t s[4];
  explicit Xoshiro(std::uint64_t seed) {
    for (auto& w : s) w = seed = splitmix64(seed);
  }
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t next() {
    std::uint64_t r = rotl(s[1] * 5, 7) * 9;
    std::uint64_t t = s[1] << 17;
    s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3]; s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return r;
  }
  // Unbiased draw from [0, m).
  std::uint64_t below(std::uint64_t m) {
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % m;
    std::uint64_t v;
    do { v = next(); } while (v >= lim);
    return v % m;
  }
};

// Number of subgraphs isomorphic to C4 = sum over A-pairs of C(codeg, 2).
long long count_c4(const std::vector<std::uint64_t>& adj) {
  long long total = 0;
  for (size_t i = 0; i < adj.size(); ++i)
    for (size_t j = i + 1; j < adj.size(); ++j) {
      long long c = __builtin_popcountll(adj[i] & adj[j]);
      total += c * (c - 1) / 2;
    }
  return total;
}

}  // namespace

MonteCarloC4 monte_carlo_c4(int n, long long trials, std::uint64_t seed, int threads) {
  if (n < 2) throw std::invalid_argument("monte_carlo_c4 needs n >= 2");
  if (n > 32) throw std::invalid_argument("monte_carlo_c4 capped at n = 32 (side fits a word)");
  if (trials < 1) throw std::invalid_argument("monte_carlo_c4 needs trials >= 1");
  const int side = 2 * n;
  std::vector<long long> counts(trials);
  parallel_for(trials, threads, [&](long long t) {
    Xoshiro rng(splitmix64(seed + static_cast<std::uint64_t>(t)));
    std::vector<std::uint64_t> adj(side, 0);
    // edge present iff draw from [0, n) is < 2
    for (int a = 0; a < side; ++a)
      for (int b = 0; b < side; ++b)
        if (rng.below(n) < 2) adj[a] |= 1ULL << b;
    counts[t] = count_c4(adj);
  });
  double mean = 0;
  for (long long c : counts) mean += static_cast<double>(c);
  mean /= static_cast<double>(trials);
  double var = 0;
  for (long long c : counts) {
    double d = static_cast<double>(c) - mean;
    var += d * d;
  }
  var /= trials > 1 ? static_cast<double>(trials - 1) : 1.0;
  return {mean, std::sqrt(var / static_cast<double>(trials)), trials};
}

}  // namespace cubforge
