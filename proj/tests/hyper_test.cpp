#include <doctest.h>

#include "pellroot/errors.hpp"
#include "pellroot/hyper.hpp"

using namespace pellroot;

TEST_CASE("first term ratios of the three families") {
  CHECK(term_ratio(Family::f10_half, 0) == make_rat(1, 2));
  CHECK(term_ratio(Family::f21_quarter, 0) == make_rat(1, 8));
  CHECK(term_ratio(Family::f32_sixth, 0) == make_rat(2, 27));
}

TEST_CASE("term ratios stay in (0,1) and increase") {
  for (Family f :
       {Family::f10_half, Family::f21_quarter, Family::f32_sixth}) {
    Rat prev = 0;
    for (unsigned long k = 0; k <= 200; ++k) {
      const Rat r = term_ratio(f, k);
      CHECK(r > 0);
      CHECK(r < 1);
      CHECK(r > prev);
      prev = r;
    }
    // far out the ratio is still below 1 but closes in like 1 - O(1/k)
    for (unsigned long k : {10ul, 100ul, 1000ul, 10000ul}) {
      const Rat r = term_ratio(f, k);
      CHECK(r < 1);
      CHECK(1 - r < make_rat(2, k));
    }
  }
}

TEST_CASE("term recurrence matches the closed form at small k") {
  const Rat z = make_rat(1, 9);
  TermState t;
  CHECK(t.value == 1);
  t = next_term(t, Family::f10_half, z);
  CHECK(t.k == 1);
  CHECK(t.value == make_rat(1, 18));  // z * 1/2
  t = next_term(t, Family::f10_half, z);
  CHECK(t.value == make_rat(1, 216));  // z^2 * (1/2)(3/4)
}

TEST_CASE("partial sums accumulate the terms") {
  const Rat z = make_rat(1, 9);
  CHECK(partial_sum(Family::f10_half, z, 1) == 1);
  CHECK(partial_sum(Family::f10_half, z, 2) == make_rat(19, 18));
  CHECK(partial_sum(Family::f10_half, z, 3) ==
        make_rat(19, 18) + make_rat(1, 216));
}

TEST_CASE("negative arguments alternate term signs") {
  const Rat z = make_rat(1, 7);
  TermState pos, neg;
  for (int k = 0; k < 12; ++k) {
    CHECK(abs(neg.value) == pos.value);
    CHECK((k % 2 == 0 ? neg.value > 0 : neg.value < 0));
    pos = next_term(pos, Family::f21_quarter, z);
    neg = next_term(neg, Family::f21_quarter, -z);
  }
}

TEST_CASE("divergent arguments are rejected") {
  CHECK_THROWS_AS(partial_sum(Family::f10_half, Rat(1), 3),
                  divergent_argument_error);
  CHECK_THROWS_AS(partial_sum(Family::f10_half, make_rat(-9, 8), 3),
                  divergent_argument_error);
  CHECK_THROWS_AS(partial_sum(Family::f10_half, make_rat(1, 9), 0),
                  std::invalid_argument);
}

TEST_CASE("tail bound dominates the remainder") {
  // compare sum(2K) - sum(K) against the bound from the last included term
  const Rat z = make_rat(2, 9);
  for (Family f :
       {Family::f10_half, Family::f21_quarter, Family::f32_sixth}) {
    const unsigned long K = 5;
    TermState t;
    for (unsigned long k = 0; k + 1 < K; ++k) t = next_term(t, f, z);
    const Rat bound = geometric_tail_bound(t.value, z);
    const Rat gap = partial_sum(f, z, 2 * K) - partial_sum(f, z, K);
    CHECK(abs(gap) <= bound);
  }
}

TEST_CASE("power identities hold on admissible samples") {
  const unsigned long digits = 30;
  const Rat half = make_rat(1, 2);
  for (const Rat& x : {make_rat(1, 4), make_rat(1, 2), make_rat(3, 4),
                       make_rat(-1, 2)}) {
    CHECK(verify_identity(Identity::linear, half, x, digits));
  }
  for (const Rat& x : {make_rat(1, 3), make_rat(1, 5), make_rat(1, 2),
                       make_rat(-1, 10)}) {
    CHECK(verify_identity(Identity::quadratic, half, x, digits));
  }
  for (const Rat& x : {make_rat(1, 3), make_rat(1, 5), make_rat(1, 10),
                       make_rat(-1, 10)}) {
    CHECK(verify_identity(Identity::cubic, half, x, digits));
  }
  // a cube root and a whole power
  CHECK(verify_identity(Identity::linear, make_rat(1, 3), half, digits));
  CHECK(verify_identity(Identity::linear, Rat(1), make_rat(1, 4), digits));
}

TEST_CASE("identity verifier rejects inadmissible inputs") {
  const Rat half = make_rat(1, 2);
  CHECK_THROWS_AS(verify_identity(Identity::linear, Rat(2), half, 30),
                  precondition_error);
  CHECK_THROWS_AS(verify_identity(Identity::linear, make_rat(2, 5), half, 30),
                  precondition_error);
  CHECK_THROWS_AS(verify_identity(Identity::linear, half, make_rat(3, 2), 30),
                  precondition_error);
  CHECK_THROWS_AS(verify_identity(Identity::quadratic, half, Rat(-2), 30),
                  precondition_error);
  CHECK_THROWS_AS(verify_identity(Identity::cubic, half, Rat(-1), 30),
                  precondition_error);
  CHECK_THROWS_AS(verify_identity(Identity::linear, half, half, 0),
                  std::invalid_argument);
}
