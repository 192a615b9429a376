#ifndef PELLROOT_PELL_HPP
#define PELLROOT_PELL_HPP

#include <optional>

#include "pellroot/numeric.hpp"

namespace pellroot {

// A validated radicand: p >= 2 and not a perfect square.
class PellInstance {
 public:
  explicit PellInstance(Int p);
  const Int& p() const { return p_; }

 private:
  Int p_;
};

// A solution (x, y) of x^2 - p*y^2 = 1 with x >= 2, y >= 1.
// The invariant is checked exactly on construction.
class PellSolution {
 public:
  PellSolution(Int p, Int x, Int y);
  const Int& p() const { return p_; }
  const Int& x() const { return x_; }
  const Int& y() const { return y_; }

  friend bool operator==(const PellSolution&, const PellSolution&) = default;

 private:
  Int p_, x_, y_;
};

// Product in the ring Z[sqrt(p)]: (x,y)*(u,v) = (xu + p*yv, xv + yu).
// Both factors must share the same p.
PellSolution pair_mul(const PellSolution& a, const PellSolution& b);

// Minimal positive solution (smallest y) via the continued-fraction
// expansion of sqrt(p): convergent at the end of the period, squared in
// the pair algebra when the period length is odd.
PellSolution fundamental_solution(const PellInstance& inst);

// Scans y = 1..y_max for the first y with p*y^2 + 1 a perfect square.
// Used as an independent oracle for fundamental_solution.
std::optional<PellSolution> brute_force_solution(const PellInstance& inst,
                                                 const Int& y_max);

// (x_s, y_s) from a base solution by the two binomial sums
//   x_s = sum C(s,2k) p^k y^2k x^(s-2k),
//   y_s = sum C(s,1+2k) p^k y^(1+2k) x^(s-1-2k).
// s >= 1.
PellSolution amplify_binomial(const PellSolution& base, unsigned long s);

// Same value as amplify_binomial, computed by binary exponentiation in
// the pair algebra. s >= 1.
PellSolution amplify_power(const PellSolution& base, unsigned long s);

}  // namespace pellroot

#endif
