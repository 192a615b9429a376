#include <doctest.h>

#include <random>

#include "pellroot/errors.hpp"
#include "pellroot/pell.hpp"

using namespace pellroot;

TEST_CASE("instance accepts nonsquare radicands only") {
  CHECK_NOTHROW(PellInstance{Int(2)});
  CHECK_NOTHROW(PellInstance{Int(61)});
  CHECK_THROWS_AS(PellInstance{Int(9)}, invalid_instance_error);
  CHECK_THROWS_AS(PellInstance{Int(1)}, invalid_instance_error);
  CHECK_THROWS_AS(PellInstance{Int(0)}, invalid_instance_error);
  CHECK_THROWS_AS(PellInstance{Int(-7)}, invalid_instance_error);
  CHECK_THROWS_AS(PellInstance{Int(1 << 20)}, invalid_instance_error);
}

TEST_CASE("solution constructor checks the defining equation") {
  CHECK_NOTHROW(PellSolution(Int(2), Int(3), Int(2)));
  CHECK_THROWS_AS(PellSolution(Int(2), Int(3), Int(1)),
                  invalid_solution_error);
  CHECK_THROWS_AS(PellSolution(Int(2), Int(1), Int(0)),
                  invalid_solution_error);
  CHECK_THROWS_AS(PellSolution(Int(2), Int(-3), Int(2)),
                  invalid_solution_error);
}

TEST_CASE("fundamental solutions of the small radicands") {
  struct Known {
    long p, x, y;
  };
  const Known known[] = {{2, 3, 2},   {3, 2, 1},   {5, 9, 4},
                         {7, 8, 3},   {11, 10, 3}, {13, 649, 180},
                         {6, 5, 2},   {10, 19, 6}, {12, 7, 2}};
  for (const Known& k : known) {
    const PellSolution sol = fundamental_solution(PellInstance{Int(k.p)});
    CHECK(sol.x() == k.x);
    CHECK(sol.y() == k.y);
  }
}

TEST_CASE("fundamental solution survives a long period") {
  // p = 61 has the largest fundamental solution below 100.
  const PellSolution sol = fundamental_solution(PellInstance{Int(61)});
  CHECK(sol.x() == Int("1766319049"));
  CHECK(sol.y() == Int("226153980"));
}

TEST_CASE("fundamental solution is minimal for p < 30") {
  for (long p = 2; p < 30; ++p) {
    if (!is_nonsquare(Int(p))) continue;
    const PellInstance inst{Int(p)};
    const PellSolution fund = fundamental_solution(inst);
    const auto scanned = brute_force_solution(inst, fund.y());
    REQUIRE(scanned.has_value());
    CHECK(*scanned == fund);
  }
}

TEST_CASE("brute force respects its search bound") {
  const PellInstance inst{Int(13)};
  CHECK_FALSE(brute_force_solution(inst, Int(179)).has_value());
  const auto hit = brute_force_solution(inst, Int(180));
  REQUIRE(hit.has_value());
  CHECK(hit->x() == 649);
  CHECK_THROWS_AS(brute_force_solution(inst, Int(0)), std::invalid_argument);
}

TEST_CASE("brute force word-sized and bignum paths agree") {
  const PellInstance inst{Int(19)};  // (170, 39)
  const auto fast = brute_force_solution(inst, Int(39));
  // A bound past the word-size guard forces the bignum path.
  const auto slow = brute_force_solution(inst, Int("4000000000000000000"));
  REQUIRE(fast.has_value());
  REQUIRE(slow.has_value());
  CHECK(*fast == *slow);
}

TEST_CASE("pair product stays on the curve") {
  const PellSolution one(Int(2), Int(3), Int(2));
  const PellSolution two = pair_mul(one, one);
  CHECK(two.x() == 17);
  CHECK(two.y() == 12);
  const PellSolution three = pair_mul(two, one);
  CHECK(three.x() == 99);
  CHECK(three.y() == 70);

  const PellSolution other(Int(3), Int(2), Int(1));
  CHECK_THROWS_AS(pair_mul(one, other), invalid_solution_error);
}

TEST_CASE("the two amplification routes agree") {
  const PellSolution bases[] = {
      PellSolution(Int(2), Int(3), Int(2)),
      PellSolution(Int(3), Int(2), Int(1)),
      PellSolution(Int(13), Int(649), Int(180)),
  };
  for (const PellSolution& base : bases) {
    for (unsigned long s = 1; s <= 12; ++s) {
      CHECK(amplify_binomial(base, s) == amplify_power(base, s));
    }
  }
}

TEST_CASE("amplification is a power map") {
  const PellSolution base(Int(5), Int(9), Int(4));
  CHECK(amplify_power(base, 1) == base);
  // s+t exponent law
  for (unsigned long s = 1; s <= 6; ++s) {
    for (unsigned long t = 1; t <= 6; ++t) {
      CHECK(amplify_power(base, s + t) ==
            pair_mul(amplify_power(base, s), amplify_power(base, t)));
    }
  }
  CHECK_THROWS_AS(amplify_power(base, 0), std::invalid_argument);
  CHECK_THROWS_AS(amplify_binomial(base, 0), std::invalid_argument);
}

TEST_CASE("integer sqrt brackets every input") {
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 20000; ++i) {
    Int n = Int(rng()) * Int(rng()) + Int(rng());  // up to ~2^192
    if (n < 0) n = -n;
    const Int r = integer_sqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  // exact squares and their neighbors
  for (long v = 0; v < 2000; ++v) {
    const Int sq = Int(v) * v;
    CHECK(integer_sqrt(sq) == v);
    if (v > 0) {
      CHECK(integer_sqrt(sq - 1) == v - 1);
      CHECK(integer_sqrt(sq + 1) == v);  // v^2 + 1 < (v+1)^2 for v >= 1
    }
  }
}

TEST_CASE("nth root floor is exact on perfect powers") {
  // k = 1 is the identity
  CHECK(nth_root_floor(Int(17), 1) == 17);
  for (unsigned long k = 2; k <= 7; ++k) {
    for (long v = 1; v < 60; ++v) {
      const Int pk = pow_int(Int(v), k);
      CHECK(nth_root_floor(pk, k) == v);
      CHECK(nth_root_floor(pk + 1, k) == v);  // v^k + 1 < (v+1)^k
      if (v > 1) CHECK(nth_root_floor(pk - 1, k) == v - 1);
    }
  }
  CHECK(nth_root_floor(Int(0), 3) == 0);
  CHECK(nth_root_floor(pow10(60) - 1, 2) == pow10(30) - 1);
}
