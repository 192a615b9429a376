#ifndef PELLROOT_EXPANSION_HPP
#define PELLROOT_EXPANSION_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pellroot/hyper.hpp"
#include "pellroot/pell.hpp"

namespace pellroot {

// The six construction rules, labelled A..F. For a solution (n, m) of
// n^2 - p*m^2 = 1 they produce sqrt(p) = c * F(z) with
//   A: c = mp/n, z =  1/(pm^2+1)            f10_half
//   B: c = n/m,  z = -1/(pm^2)              f10_half
//   C: c = mp/n, z =  4pm^2/(pm^2+1)^2      f21_quarter
//   D: c = n/m,  z = -4(pm^2+1)/(p^2m^4)    f21_quarter   needs p^2m^4 > 4pm^2+4
//   E: c = mp/n, z =  27p^2m^4/(4(pm^2+1)^3) f32_sixth    needs 4(pm^2+1)^3 > 27p^2m^4
//   F: c = n/m,  z = -27(pm^2+1)^2/(4p^3m^6) f32_sixth    needs 4p^3m^6 > 27(pm^2+1)^2
enum class Theorem { A, B, C, D, E, F };

inline constexpr Theorem kAllTheorems[] = {Theorem::A, Theorem::B, Theorem::C,
                                           Theorem::D, Theorem::E, Theorem::F};

char theorem_label(Theorem t);
Theorem theorem_from_label(char label);  // throws std::invalid_argument

Family theorem_family(Theorem t);

// A fully determined series for sqrt(p): exact prefactor and argument in
// lowest terms, plus the provenance (p, m, n, rule label).
struct SeriesSpec {
  Int p;
  Int m;
  Int n;
  Theorem theorem = Theorem::A;
  Family family = Family::f10_half;
  Rat prefactor;
  Rat argument;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

// Side condition of a rule for (p, m). A, B, C hold for every valid
// solution; D, E, F are the strict inequalities above.
bool applicable(Theorem t, const Int& p, const Int& m);

// Builds the series spec for one rule from a Pell solution (m = sol.y, n = sol.x).
// Throws not_applicable_error when the side condition fails.
SeriesSpec build(Theorem t, const PellSolution& sol);

struct BuildSkip {
  unsigned long power = 0;
  Theorem theorem = Theorem::A;
};

struct BuildAllResult {
  std::vector<SeriesSpec> specs;
  std::vector<BuildSkip> skipped;  // non-applicable (power, rule) pairs
};

// Amplifies the fundamental solution of p to each power in `powers` and
// emits every applicable rule's spec (up to 6 per power). Non-applicable
// pairs are reported in `skipped`, not errors.
BuildAllResult build_all(const Int& p, const std::vector<unsigned long>& powers);

// JSON: {p, m, n, theorem, prefactor: {num, den}, argument: {num, den}},
// integers as decimal strings. Parsing revalidates every invariant.
nlohmann::json to_json(const SeriesSpec& spec);
SeriesSpec spec_from_json(const nlohmann::json& j);

// Displayed-equation form of a series spec.
std::string to_latex(const SeriesSpec& spec);

}  // namespace pellroot

#endif
