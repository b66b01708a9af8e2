#include <doctest.h>

#include <stdexcept>

#include "cubforge/branched.hpp"
#include "cubforge/labeling.hpp"

using namespace cubforge;

TEST_SUITE_BEGIN("labeling");

TEST_CASE("permutation arithmetic") {
  Perm a = perm_alpha(5);   // x -> x + 1
  Perm b = perm_beta(5, 2); // x -> 2x
  CHECK(a == Perm{1, 2, 3, 4, 0});
  CHECK(b == Perm{0, 2, 4, 1, 3});
  // compose applies the first argument first
  CHECK(perm_compose(a, b) == Perm{2, 4, 1, 3, 0});
  CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(5));
  CHECK(perm_power(a, 5) == perm_identity(5));
  CHECK(perm_power(a, -2) == perm_power(a, 3));
  CHECK(perm_is_full_cycle(a));
  CHECK(!perm_is_full_cycle(perm_identity(5)));
  CHECK(!perm_is_full_cycle(b));  // fixes 0
  CHECK_THROWS_AS(perm_compose(a, perm_identity(4)), std::invalid_argument);
}

TEST_CASE("primitive roots") {
  CHECK(least_primitive_root(7) == 3);
  CHECK(least_primitive_root(5) == 2);
  CHECK(is_primitive_root(3, 7));
  CHECK(!is_primitive_root(2, 7));  // 2^3 = 1 mod 7
  CHECK(!is_primitive_root(0, 7));
  CHECK_THROWS_AS(is_primitive_root(2, 8), std::invalid_argument);
}

TEST_CASE("commutator exponents") {
  // n (l^m - 1) mod q
  CHECK(commutator_exponent(1, 1, 2, 5) == 1);
  CHECK(commutator_exponent(2, 3, 2, 5) == 4);
  CHECK(commutator_exponent(0, 3, 2, 5) == 0);

  // against the composed permutations, applied in walk order
  Perm alpha = perm_alpha(5), beta = perm_beta(5, 2);
  for (long long m = -2; m <= 2; ++m)
    for (long long n = -2; n <= 2; ++n) {
      Perm walk = perm_compose(
          perm_compose(perm_compose(perm_power(alpha, -n), perm_power(beta, -m)),
                       perm_power(alpha, n)),
          perm_power(beta, m));
      CHECK(walk == perm_power(alpha, commutator_exponent(m, n, 2, 5)));
    }
}

TEST_CASE("labeling schemes on the cage pair") {
  Graph c = cage_graph(5);
  CHECK(choose_q(c, c) == 5);

  auto s = build_labeling(c, c, 5);
  CHECK(s.q == 5);
  CHECK(s.l == 2);
  CHECK(s.alpha_exp == std::vector<int>{1, 2, 3, 4});
  CHECK(s.beta_exp == std::vector<int>{1, 2, 3, 4});
  CHECK(labeling_ok(c, c, s));

  SUBCASE("tampering breaks the checks") {
    auto t = s;
    t.alpha_exp[0] = t.alpha_exp[1];  // duplicate label into a vertex
    CHECK(!labeling_ok(c, c, t));
    t = s;
    t.l = 4;  // order 2 mod 5, not primitive
    CHECK(!labeling_ok(c, c, t));
    t = s;
    t.q = 4;
    CHECK(!labeling_ok(c, c, t));
    t = s;
    t.beta_exp[3] = 5;  // out of range
    CHECK(!labeling_ok(c, c, t));
  }
  SUBCASE("construction guards its inputs") {
    CHECK_THROWS_AS(build_labeling(c, c, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_labeling(c, c, 3), std::invalid_argument);
  }
}

TEST_CASE("holonomy around removed corners") {
  Graph c = cage_graph(5);
  auto s = build_labeling(c, c, 5);
  auto rep = loop4_holonomy_check(c, c, s);
  CHECK(rep.ok);
  CHECK(rep.removed_corners == 1);
  CHECK(rep.loops_checked == 36);  // 6 edge pairs at each endpoint
  CHECK(rep.exponents_match);
  CHECK(!rep.failure.has_value());

  auto t = s;
  t.alpha_exp[0] = t.alpha_exp[1];
  CHECK_THROWS_AS(loop4_holonomy_check(c, c, t), std::invalid_argument);
}

TEST_SUITE_END();
