#include "pellroot/hyper.hpp"

#include <stdexcept>

#include "pellroot/errors.hpp"

namespace pellroot {

const HyperParams& family_params(Family family) {
  static const HyperParams f10{{make_rat(1, 2)}, {}};
  static const HyperParams f21{{make_rat(1, 4), make_rat(3, 4)},
                               {make_rat(3, 2)}};
  static const HyperParams f32{
      {make_rat(1, 2), make_rat(1, 6), make_rat(5, 6)},
      {make_rat(3, 4), make_rat(5, 4)}};
  switch (family) {
    case Family::f10_half:
      return f10;
    case Family::f21_quarter:
      return f21;
    case Family::f32_sixth:
      return f32;
  }
  throw std::invalid_argument("unknown family");
}

const char* family_name(Family family) {
  switch (family) {
    case Family::f10_half:
      return "1F0(1/2)";
    case Family::f21_quarter:
      return "2F1(1/4,3/4;3/2)";
    case Family::f32_sixth:
      return "3F2(1/2,1/6,5/6;3/4,5/4)";
  }
  throw std::invalid_argument("unknown family");
}

Rat term_ratio(const HyperParams& params, unsigned long k) {
  Rat num = 1;
  for (const Rat& a : params.num) num *= a + k;
  Rat den(k + 1);
  for (const Rat& b : params.den) den *= b + k;
  return num / den;
}

Rat term_ratio(Family family, unsigned long k) {
  return term_ratio(family_params(family), k);
}

TermState next_term(const TermState& state, const HyperParams& params,
                    const Rat& z) {
  return {state.k + 1, state.value * z * term_ratio(params, state.k)};
}

TermState next_term(const TermState& state, Family family, const Rat& z) {
  return next_term(state, family_params(family), z);
}

Rat partial_sum(const HyperParams& params, const Rat& z, unsigned long K) {
  if (K < 1) throw std::invalid_argument("partial_sum: K must be >= 1");
  if (!(abs(z) < 1))
    throw divergent_argument_error("partial_sum requires |z| < 1");
  Rat sum = 0;
  TermState t;
  for (unsigned long k = 0; k < K; ++k) {
    sum += t.value;
    if (k + 1 < K) t = next_term(t, params, z);
  }
  return sum;
}

Rat partial_sum(Family family, const Rat& z, unsigned long K) {
  return partial_sum(family_params(family), z, K);
}

Rat geometric_tail_bound(const Rat& last_term, const Rat& z) {
  const Rat az = abs(z);
  return abs(last_term) * az / (1 - az);
}

namespace {

// Parameter lists of the general-a identities.
HyperParams identity_params(Identity which, const Rat& a) {
  switch (which) {
    case Identity::linear:
      return {{a}, {}};
    case Identity::quadratic:
      return {{a / 2, (1 + a) / 2}, {1 + a}};
    case Identity::cubic:
      return {{a / 3, (1 + a) / 3, (2 + a) / 3}, {(1 + a) / 2, 1 + a / 2}};
  }
  throw std::invalid_argument("unknown identity");
}

Rat identity_argument(Identity which, const Rat& x) {
  switch (which) {
    case Identity::linear:
      return x;
    case Identity::quadratic:
      return 4 * x / ((1 + x) * (1 + x));
    case Identity::cubic:
      return 27 * x / (4 * (1 + x) * (1 + x) * (1 + x));
  }
  throw std::invalid_argument("unknown identity");
}

Rat rat_pow_ui(const Rat& q, unsigned long e) {
  return make_rat(pow_int(q.get_num(), e), pow_int(q.get_den(), e));
}

}  // namespace

bool verify_identity(Identity which, const Rat& a, const Rat& x,
                     unsigned long digits) {
  if (digits < 1)
    throw std::invalid_argument("verify_identity: digits must be >= 1");
  if (!(a > 0 && a <= 1))
    throw precondition_error("verify_identity: a must lie in (0, 1]");
  const Int& av = a.get_den();
  if (av != 1 && av != 2 && av != 3 && av != 4 && av != 6)
    throw precondition_error(
        "verify_identity: denominator of a must be one of 1,2,3,4,6");
  if (which != Identity::linear && !(x > -1))
    throw precondition_error("verify_identity: x must exceed -1");

  const Rat z = identity_argument(which, x);
  if (!(abs(z) < 1))
    throw precondition_error("verify_identity: argument outside |z| < 1");

  const HyperParams params = identity_params(which, a);
  const unsigned long scale = digits + 10;

  // Left side: exact summation until the geometric tail is negligible at
  // the working scale.
  Rat sum = 0;
  TermState t;
  const Rat stop = make_rat(1, pow10(scale + 2));
  while (true) {
    sum += t.value;
    if (geometric_tail_bound(t.value, z) < stop) break;
    t = next_term(t, params, z);
  }
  const Int lhs = scaled_round(sum, scale);

  // Right side: (1-x)^-a resp. (1+x)^a via an integer root of an exact
  // rational power, then a reciprocal for the negative exponent.
  const Rat base = which == Identity::linear ? Rat(1 - x) : Rat(1 + x);
  const unsigned long u =
      static_cast<unsigned long>(a.get_num().get_ui());
  const unsigned long v = static_cast<unsigned long>(av.get_ui());
  const Int root_input = scaled_trunc(rat_pow_ui(base, u), v * scale);
  const Int w = nth_root_floor(root_input, v);  // ~ base^(u/v) * 10^scale
  const Int rhs = which == Identity::linear ? Int(pow10(2 * scale) / w) : w;

  return abs(lhs - rhs) < pow10(scale - digits);
}

}  // namespace pellroot
