#ifndef PELLROOT_BIGFIX_HPP
#define PELLROOT_BIGFIX_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pellroot/expansion.hpp"

namespace pellroot {

// Scaled-integer fixed-point value mantissa / 10^scale. One evaluation
// keeps a single uniform scale so addends stay aligned.
struct BigFixed {
  Int mantissa;
  unsigned long scale = 0;

  // Nearest mantissa at the given scale, ties away from zero.
  static BigFixed from_rational(const Rat& q, unsigned long scale);

  Rat to_rational() const;

  // Truncates toward zero to `digits` fractional digits and renders with
  // a decimal point (no point when digits == 0). digits <= scale.
  std::string decimal(unsigned long digits) const;
};

struct EvalOptions {
  unsigned long max_digits = 1'000'000;
};

struct EvalReport {
  SeriesSpec spec;
  unsigned long digits_requested = 0;
  unsigned long guard_digits = 0;
  unsigned long terms_used = 0;
  Rat tail_bound;        // geometric bound on the omitted remainder
  std::string decimal;   // digits_requested fractional digits, truncated
  bool oracle_agrees = false;
};

// A-priori bound on the number of terms for `digits` correct digits:
// the smallest K with |z|^K / (1-|z|) <= 10^-(digits+2) / (1/|c| + 1).
// Conservative; evaluation may extend past it to certify its tail.
unsigned long terms_needed(const SeriesSpec& spec, unsigned long digits);

// Sums the series in fixed point at scale digits + guard (exact rational
// summation up to 64 terms), multiplies by the prefactor exactly, truncates
// to `digits` fractional digits, and certifies the result against
// sqrt_oracle, tolerating a difference of 1 in the last digit. Summation
// stops once at least terms_needed terms are in and the geometric tail
// bound drops below 10^-(digits + ceil(guard/2)).
EvalReport evaluate(const SeriesSpec& spec, unsigned long digits,
                    const EvalOptions& options = {});

// sqrt(p) truncated to `digits` fractional digits: the decimal rendering
// of floor(sqrt(p * 10^(2*digits))). Integer Newton only; independent of
// every series evaluation path.
std::string sqrt_oracle(const Int& p, unsigned long digits);

// For k = 1..max_terms, the number of leading decimal digits (integer part
// included) of prefactor * partial_sum(k) that agree with the oracle.
std::vector<std::pair<unsigned long, unsigned long>> convergence_table(
    const SeriesSpec& spec, unsigned long max_terms);

// JSON: {spec, digits, terms_used, tail_bound: {num, den} as decimal
// strings, decimal, oracle_agrees}.
nlohmann::json to_json(const EvalReport& report);

}  // namespace pellroot

#endif
