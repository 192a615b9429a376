#include "pellroot/numeric.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace pellroot {

Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int integer_sqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("integer_sqrt: negative input");
  if (n == 0) return 0;
  // Start at 2^ceil(bits/2) >= sqrt(n); the iteration is then monotone
  // decreasing and lands on floor(sqrt(n)).
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Int x = Int(1) << static_cast<unsigned long>((bits + 1) / 2);
  while (true) {
    Int y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

Int nth_root_floor(const Int& n, unsigned long k) {
  if (k == 0) throw std::invalid_argument("nth_root_floor: k must be >= 1");
  if (n < 0) throw std::invalid_argument("nth_root_floor: negative input");
  if (k == 1 || n == 0 || n == 1) return k == 1 ? n : Int(n != 0 ? 1 : 0);
  if (k == 2) return integer_sqrt(n);
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Int x = Int(1) << static_cast<unsigned long>(bits / k + 1);
  while (true) {
    Int y = ((k - 1) * x + n / pow_int(x, k - 1)) / k;
    if (y >= x) break;
    x = y;
  }
  while (pow_int(x, k) > n) --x;
  while (pow_int(x + 1, k) <= n) ++x;
  return x;
}

bool is_nonsquare(const Int& p) {
  if (p < 1) throw std::invalid_argument("is_nonsquare: p must be >= 1");
  const Int r = integer_sqrt(p);
  return r * r != p;
}

Int round_nearest(const Int& num, const Int& den) {
  assert(den > 0);
  const Int anum = abs(num);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), anum.get_mpz_t(),
              den.get_mpz_t());
  if (2 * r >= den) ++q;
  return num < 0 ? Int(-q) : q;
}

Int trunc_toward_zero(const Int& num, const Int& den) {
  assert(den > 0);
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int scaled_round(const Rat& q, unsigned long scale) {
  return round_nearest(q.get_num() * pow10(scale), q.get_den());
}

Int scaled_trunc(const Rat& q, unsigned long scale) {
  return trunc_toward_zero(q.get_num() * pow10(scale), q.get_den());
}

std::string decimal_string(const Int& mantissa, unsigned long scale) {
  const bool neg = mantissa < 0;
  std::string digits = Int(abs(mantissa)).get_str();
  if (scale == 0) return (neg ? "-" : "") + digits;
  if (digits.size() <= scale) digits.insert(0, scale + 1 - digits.size(), '0');
  digits.insert(digits.size() - scale, ".");
  return (neg ? "-" : "") + digits;
}

unsigned long ceil_log10(const Int& n) {
  assert(n >= 1);
  unsigned long g = 0;
  Int v = 1;
  while (v < n) {
    v *= 10;
    ++g;
  }
  return g;
}

unsigned long decimal_digits(const Int& n) {
  if (n == 0) return 1;
  // sizeinbase may overestimate by one; correct exactly.
  std::size_t d = mpz_sizeinbase(n.get_mpz_t(), 10);
  if (d > 1 && abs(n) < pow10(static_cast<unsigned long>(d - 1))) --d;
  return static_cast<unsigned long>(d);
}

double log10_abs(const Rat& q) {
  // |q| = num/den with d-digit counts: log10 via mantissa-free estimate,
  // refined with the leading limbs through get_d on a normalized copy.
  if (q == 0) throw std::invalid_argument("log10_abs: zero");
  const long nd = static_cast<long>(decimal_digits(q.get_num()));
  const long dd = static_cast<long>(decimal_digits(q.get_den()));
  // Scale into double range, take the exact log of the rest.
  const long shift = nd - dd;
  Rat scaled = abs(q);
  if (shift > 0)
    scaled /= Rat(pow10(static_cast<unsigned long>(shift)));
  else if (shift < 0)
    scaled *= Rat(pow10(static_cast<unsigned long>(-shift)));
  // Now 10^-1 < scaled < 10^1.
  return static_cast<double>(shift) + std::log10(scaled.get_d());
}

}  // namespace pellroot
