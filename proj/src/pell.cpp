#include "pellroot/pell.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include "pellroot/errors.hpp"

namespace pellroot {

PellInstance::PellInstance(Int p) : p_(std::move(p)) {
  if (p_ < 2)
    throw invalid_instance_error("p must be >= 2, got " + p_.get_str());
  if (!is_nonsquare(p_))
    throw invalid_instance_error("p must not be a perfect square, got " +
                                 p_.get_str());
}

PellSolution::PellSolution(Int p, Int x, Int y)
    : p_(std::move(p)), x_(std::move(x)), y_(std::move(y)) {
  if (x_ < 2 || y_ < 1)
    throw invalid_solution_error("solution out of range: x=" + x_.get_str() +
                                 " y=" + y_.get_str());
  if (x_ * x_ - p_ * y_ * y_ != 1)
    throw invalid_solution_error("x^2 - p*y^2 != 1 for p=" + p_.get_str() +
                                 " x=" + x_.get_str() + " y=" + y_.get_str());
}

PellSolution pair_mul(const PellSolution& a, const PellSolution& b) {
  if (a.p() != b.p())
    throw invalid_solution_error("pair_mul: mismatched radicands");
  return PellSolution(a.p(), a.x() * b.x() + a.p() * a.y() * b.y(),
                      a.x() * b.y() + a.y() * b.x());
}

PellSolution fundamental_solution(const PellInstance& inst) {
  const Int& p = inst.p();
  const Int a0 = integer_sqrt(p);

  // P_i, Q_i, a_i recurrence for the continued fraction of sqrt(p);
  // h_i/k_i are the convergents. Q returns to 1 at the end of the period.
  Int P = 0, Q = 1, a = a0;
  Int h_prev = a0, h_prev2 = 1;
  Int k_prev = 1, k_prev2 = 0;
  unsigned long period = 0;

  while (true) {
    ++period;
    P = a * Q - P;
    Q = (p - P * P) / Q;
    a = (a0 + P) / Q;
    if (Q == 1) break;
    Int h = a * h_prev + h_prev2;
    Int k = a * k_prev + k_prev2;
    h_prev2 = std::exchange(h_prev, std::move(h));
    k_prev2 = std::exchange(k_prev, std::move(k));
  }

  // h/k at the period end solves x^2 - p*y^2 = (-1)^period.
  if (period % 2 == 0) return PellSolution(p, h_prev, k_prev);
  return PellSolution(p, h_prev * h_prev + p * k_prev * k_prev,
                      2 * h_prev * k_prev);
}

namespace {

// Word-sized scan: walks x upward alongside y, tracking x^2 additively,
// so each candidate y costs O(1) additions.
std::optional<PellSolution> brute_force_u64(const Int& p_big, std::uint64_t p,
                                            std::uint64_t y_max) {
  std::uint64_t x = 1, x_sq = 1;
  std::uint64_t target = p + 1;  // p*y^2 + 1 at y = 1
  for (std::uint64_t y = 1; y <= y_max; ++y) {
    while (x_sq < target) {
      x_sq += 2 * x + 1;
      ++x;
    }
    if (x_sq == target) return PellSolution(p_big, Int(x), Int(y));
    target += p * (2 * y + 1);
  }
  return std::nullopt;
}

}  // namespace

std::optional<PellSolution> brute_force_solution(const PellInstance& inst,
                                                 const Int& y_max) {
  if (y_max < 1) throw std::invalid_argument("brute_force: y_max must be >= 1");

  // p*(y_max+1)^2 must stay clear of 2^63 for the word-sized path.
  if (inst.p().fits_ulong_p() && y_max.fits_ulong_p()) {
    const std::uint64_t p = inst.p().get_ui();
    const std::uint64_t ym = y_max.get_ui();
    const unsigned __int128 worst =
        static_cast<unsigned __int128>(p) * (ym + 1) * (ym + 1);
    if (worst < (static_cast<unsigned __int128>(1) << 63))
      return brute_force_u64(inst.p(), p, ym);
  }

  const Int& p = inst.p();
  for (Int y = 1; y <= y_max; ++y) {
    const Int t = p * y * y + 1;
    const Int r = integer_sqrt(t);
    if (r * r == t) return PellSolution(p, r, y);
  }
  return std::nullopt;
}

PellSolution amplify_binomial(const PellSolution& base, unsigned long s) {
  if (s < 1) throw std::invalid_argument("amplify: s must be >= 1");
  const Int &p = base.p(), &x1 = base.x(), &y1 = base.y();

  Int xs = 0;
  for (unsigned long k = 0; 2 * k <= s; ++k) {
    Int bin;
    mpz_bin_uiui(bin.get_mpz_t(), s, 2 * k);
    xs += bin * pow_int(p, k) * pow_int(y1, 2 * k) * pow_int(x1, s - 2 * k);
  }
  Int ys = 0;
  for (unsigned long k = 0; 1 + 2 * k <= s; ++k) {
    Int bin;
    mpz_bin_uiui(bin.get_mpz_t(), s, 1 + 2 * k);
    ys += bin * pow_int(p, k) * pow_int(y1, 1 + 2 * k) *
          pow_int(x1, s - 1 - 2 * k);
  }
  return PellSolution(p, std::move(xs), std::move(ys));
}

PellSolution amplify_power(const PellSolution& base, unsigned long s) {
  if (s < 1) throw std::invalid_argument("amplify: s must be >= 1");
  // Binary exponentiation in the pair algebra; the accumulator starts at
  // the first set bit to avoid an identity element (y = 0 is not a valid
  // PellSolution).
  PellSolution acc = base;
  PellSolution result = base;
  bool have_result = false;
  while (s > 0) {
    if (s & 1) {
      result = have_result ? pair_mul(result, acc) : acc;
      have_result = true;
    }
    s >>= 1;
    if (s > 0) acc = pair_mul(acc, acc);
  }
  return result;
}

}  // namespace pellroot
