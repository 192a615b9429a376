#ifndef PELLROOT_NUMERIC_HPP
#define PELLROOT_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace pellroot {

using Int = mpz_class;
using Rat = mpq_class;

// 10^e
Int pow10(unsigned long e);

// base^e
Int pow_int(const Int& base, unsigned long e);

// Canonical rational num/den (den != 0; sign carried by the numerator,
// fraction reduced).
Rat make_rat(const Int& num, const Int& den);

// floor(sqrt(n)) by Newton iteration on integers. n >= 0.
Int integer_sqrt(const Int& n);

// floor(n^(1/k)) by Newton iteration. n >= 0, k >= 1.
Int nth_root_floor(const Int& n, unsigned long k);

// true iff floor(sqrt(p))^2 != p. p >= 1.
bool is_nonsquare(const Int& p);

// Nearest integer to num/den, ties away from zero. den > 0.
Int round_nearest(const Int& num, const Int& den);

// Integer part of num/den (truncation toward zero). den > 0.
Int trunc_toward_zero(const Int& num, const Int& den);

// Nearest integer to q * 10^scale, ties away from zero.
Int scaled_round(const Rat& q, unsigned long scale);

// floor of |q| * 10^scale times sign(q) -- i.e. truncation toward zero.
Int scaled_trunc(const Rat& q, unsigned long scale);

// Renders mantissa / 10^scale with exactly `scale` digits after the
// decimal point ("3" for scale 0, "3.60" for mantissa 360, scale 2).
std::string decimal_string(const Int& mantissa, unsigned long scale);

// Smallest g with 10^g >= n, i.e. ceil(log10(n)) for n >= 1.
unsigned long ceil_log10(const Int& n);

// Number of decimal digits of |n| (1 for n = 0).
unsigned long decimal_digits(const Int& n);

// log10|q| estimated from digit counts; exact enough for rate reporting
// and immune to the double-exponent range.
double log10_abs(const Rat& q);

}  // namespace pellroot

#endif
