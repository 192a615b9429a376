#ifndef PELLROOT_HYPER_HPP
#define PELLROOT_HYPER_HPP

#include <vector>

#include "pellroot/numeric.hpp"

namespace pellroot {

// The three fixed kernels. Upper/lower parameter lists (the implicit
// k! factor is not listed):
//   f10_half:    (1/2) / ()
//   f21_quarter: (1/4, 3/4) / (3/2)
//   f32_sixth:   (1/2, 1/6, 5/6) / (3/4, 5/4)
enum class Family { f10_half, f21_quarter, f32_sixth };

struct HyperParams {
  std::vector<Rat> num;
  std::vector<Rat> den;
};

const HyperParams& family_params(Family family);

const char* family_name(Family family);

// t_{k+1} / (z * t_k) = prod(a_i + k) / ((1 + k) * prod(b_j + k)).
// Lies in (0, 1) for all k >= 0 for the three fixed families.
Rat term_ratio(const HyperParams& params, unsigned long k);
Rat term_ratio(Family family, unsigned long k);

struct TermState {
  unsigned long k = 0;
  Rat value = 1;  // t_0 = 1
};

// Advances t_k to t_{k+1} = t_k * z * term_ratio(k).
TermState next_term(const TermState& state, const HyperParams& params,
                    const Rat& z);
TermState next_term(const TermState& state, Family family, const Rat& z);

// Exact sum of the first K terms t_0..t_{K-1}. Requires |z| < 1.
Rat partial_sum(const HyperParams& params, const Rat& z, unsigned long K);
Rat partial_sum(Family family, const Rat& z, unsigned long K);

// Bound on the omitted remainder after a partial sum whose last included
// term is t: |sum - partial| <= |t| * |z| / (1 - |z|). Valid because every
// term ratio lies in (0, 1).
Rat geometric_tail_bound(const Rat& last_term, const Rat& z);

// The three underlying binomial-expansion identities, named for the degree
// of the rational substitution feeding the series argument:
//   linear:    1F0(a; x)                 = (1-x)^-a,  |x| < 1
//   quadratic: 2F1(a/2, (1+a)/2; 1+a; w) = (1+x)^a,   w = 4x/(1+x)^2, |w| < 1
//   cubic:     3F2(a/3, (1+a)/3, (2+a)/3;
//                  (1+a)/2, 1+a/2; w)    = (1+x)^a,   w = 27x/(4(1+x)^3), |w| < 1
enum class Identity { linear, quadratic, cubic };

// Sums the left side and extracts integer roots for the right side
// ((1-x)^-a resp. (1+x)^a), then compares to `digits` decimal digits.
// a must lie in (0, 1] with denominator in {1, 2, 3, 4, 6}; x must be
// admissible for the chosen identity. Root extraction is Newton on
// integers; no series is used on the right side.
bool verify_identity(Identity which, const Rat& a, const Rat& x,
                     unsigned long digits);

}  // namespace pellroot

#endif
