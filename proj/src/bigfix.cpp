#include "pellroot/bigfix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pellroot/errors.hpp"

namespace pellroot {

BigFixed BigFixed::from_rational(const Rat& q, unsigned long scale) {
  return {scaled_round(q, scale), scale};
}

Rat BigFixed::to_rational() const { return make_rat(mantissa, pow10(scale)); }

std::string BigFixed::decimal(unsigned long digits) const {
  if (digits > scale)
    throw std::invalid_argument("BigFixed::decimal: digits exceed scale");
  const Int shifted = trunc_toward_zero(mantissa, pow10(scale - digits));
  return decimal_string(shifted, digits);
}

unsigned long terms_needed(const SeriesSpec& spec, unsigned long digits) {
  const Rat az = abs(spec.argument);
  const Rat thr =
      Rat(1) / ((1 / abs(spec.prefactor) + 1) * pow10(digits + 2));

  // Upper bound on |z|^K / (1-|z|) held as a ceil-rounded mantissa at
  // scale S; one word-sized multiply and divide per step.
  const unsigned long S = digits + 30;
  const Int T = scaled_trunc(thr, S);
  const Rat first = az / (1 - az);
  const Int first_den = first.get_den();
  Int acc = first.get_num() * pow10(S);
  mpz_cdiv_q(acc.get_mpz_t(), acc.get_mpz_t(), first_den.get_mpz_t());

  const Int zn = az.get_num();
  const Int zd = az.get_den();
  unsigned long K = 1;
  while (acc > T) {
    acc *= zn;
    mpz_cdiv_q(acc.get_mpz_t(), acc.get_mpz_t(), zd.get_mpz_t());
    ++K;
  }
  return K;
}

EvalReport evaluate(const SeriesSpec& spec, unsigned long digits,
                    const EvalOptions& options) {
  if (digits > options.max_digits)
    throw precision_overflow_error("requested digits exceed the configured cap");

  const unsigned long K0 = terms_needed(spec, digits);
  const unsigned long guard = 10 + ceil_log10(Int(K0) + 1);
  const unsigned long scale = digits + guard;
  const Rat& z = spec.argument;
  const Rat az = abs(z);
  const HyperParams& params = family_params(spec.family);
  // Summation continues until the certified tail drops below this, even
  // past the a-priori term count.
  const Rat thr = make_rat(1, pow10(digits + (guard + 1) / 2));

  EvalReport report;
  report.spec = spec;
  report.digits_requested = digits;
  report.guard_digits = guard;

  Rat total;
  if (K0 <= 64) {
    // Few terms: sum exactly.
    Rat sum = 0;
    TermState t;
    unsigned long used = 0;
    while (true) {
      sum += t.value;
      ++used;
      report.tail_bound = geometric_tail_bound(t.value, z);
      if (used >= K0 && report.tail_bound < thr) break;
      t = next_term(t, params, z);
    }
    report.terms_used = used;
    total = spec.prefactor * sum;
  } else {
    // Long sums: carry the term as a mantissa at the working scale. Each
    // step multiplies by the exact rational z * ratio(k) and rounds once,
    // so the term stays within slack ulps of the true value.
    const Int unit = pow10(scale);
    const Rat slack = Rat(1, 2) / (1 - az) + 1;
    Int acc = 0;
    Int tm = unit;
    unsigned long used = 0;
    unsigned long k = 0;
    while (true) {
      acc += tm;
      ++used;
      const Rat last = (Rat(abs(tm)) + slack) / Rat(unit);
      report.tail_bound = geometric_tail_bound(last, z);
      if (used >= K0 && report.tail_bound < thr) break;
      const Rat step = z * term_ratio(params, k);
      tm = round_nearest(tm * step.get_num(), step.get_den());
      ++k;
    }
    report.terms_used = used;
    total = spec.prefactor * make_rat(acc, unit);
  }

  const Int mant = scaled_trunc(total, digits);
  report.decimal = decimal_string(mant, digits);
  const Int oracle_mant = integer_sqrt(spec.p * pow10(2 * digits));
  report.oracle_agrees = abs(mant - oracle_mant) <= 1;
  return report;
}

std::string sqrt_oracle(const Int& p, unsigned long digits) {
  const PellInstance checked(p);
  const Int mant = integer_sqrt(checked.p() * pow10(2 * digits));
  return decimal_string(mant, digits);
}

namespace {

// Leading decimal digits (integer part included) shared by two values at
// a common scale, counted on their renderings.
unsigned long matching_digits(const Int& a, const Int& b,
                              unsigned long scale) {
  const std::string sa = decimal_string(a, scale);
  const std::string sb = decimal_string(b, scale);
  unsigned long count = 0;
  for (std::size_t i = 0; i < sa.size() && i < sb.size(); ++i) {
    if (sa[i] != sb[i]) break;
    if (sa[i] != '.' && sa[i] != '-') ++count;
  }
  return count;
}

}  // namespace

std::vector<std::pair<unsigned long, unsigned long>> convergence_table(
    const SeriesSpec& spec, unsigned long max_terms) {
  if (max_terms < 1)
    throw std::invalid_argument("convergence_table: max_terms must be >= 1");
  const double rate = -log10_abs(spec.argument);
  const unsigned long per_term =
      rate <= 1.0 ? 3 : static_cast<unsigned long>(std::ceil(rate)) + 2;
  const unsigned long P =
      std::max<unsigned long>(60, (max_terms + 1) * per_term);
  const Int oracle = integer_sqrt(spec.p * pow10(2 * P));
  const HyperParams& params = family_params(spec.family);

  std::vector<std::pair<unsigned long, unsigned long>> out;
  out.reserve(max_terms);
  Rat sum = 0;
  TermState t;
  for (unsigned long k = 1; k <= max_terms; ++k) {
    sum += t.value;
    t = next_term(t, params, spec.argument);
    const Int approx = scaled_trunc(spec.prefactor * sum, P);
    out.emplace_back(k, matching_digits(approx, oracle, P));
  }
  return out;
}

nlohmann::json to_json(const EvalReport& report) {
  return nlohmann::json{
      {"spec", to_json(report.spec)},
      {"digits", report.digits_requested},
      {"guard_digits", report.guard_digits},
      {"terms_used", report.terms_used},
      {"tail_bound",
       {{"num", report.tail_bound.get_num().get_str()},
        {"den", report.tail_bound.get_den().get_str()}}},
      {"decimal", report.decimal},
      {"oracle_agrees", report.oracle_agrees}};
}

}  // namespace pellroot
