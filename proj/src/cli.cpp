#include "pellroot/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pellroot/errors.hpp"

namespace pellroot::cli {

namespace {

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int parse_radicand(const std::string& text, bool prime_only) {
  Int p;
  try {
    p = Int(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("p must be a decimal integer, got '" + text +
                                "'");
  }
  if (prime_only && !is_probable_prime(p))
    throw invalid_instance_error("p = " + p.get_str() +
                                 " is not prime (--prime-only)");
  return p;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const not_applicable_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotApplicable;
  } catch (const divergent_argument_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotApplicable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

std::string tail_display(const Rat& tail) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "1e%ld",
                static_cast<long>(std::ceil(log10_abs(tail))));
  return buf;
}

}  // namespace

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (args.power < 1) throw std::invalid_argument("--power must be >= 1");
    const Int p = parse_radicand(args.p, args.prime_only);
    const PellInstance inst(p);
    PellSolution sol = fundamental_solution(inst);
    if (args.power > 1) sol = amplify_power(sol, args.power);
    if (args.json) {
      const nlohmann::json doc{{"p", p.get_str()},
                               {"s", args.power},
                               {"x", sol.x().get_str()},
                               {"y", sol.y().get_str()}};
      out << doc.dump(2) << '\n';
    } else {
      out << "p: " << p << "\ns: " << args.power << "\nx: " << sol.x()
          << "\ny: " << sol.y() << '\n';
    }
    return kExitOk;
  });
}

int run_series(const SeriesArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (args.power < 1) throw std::invalid_argument("--power must be >= 1");
    const Int p = parse_radicand(args.p, args.prime_only);
    const PellInstance inst(p);
    const PellSolution sol =
        amplify_power(fundamental_solution(inst), args.power);

    std::vector<SeriesSpec> specs;
    if (args.theorem == "all") {
      for (Theorem t : kAllTheorems) {
        if (applicable(t, sol.p(), sol.y()))
          specs.push_back(build(t, sol));
        else
          err << "note: rule " << theorem_label(t)
              << " not applicable at s = " << args.power << '\n';
      }
    } else {
      if (args.theorem.size() != 1)
        throw std::invalid_argument("--theorem must be one of A..F or all");
      specs.push_back(build(theorem_from_label(args.theorem[0]), sol));
    }

    if (args.json) {
      nlohmann::json doc = nlohmann::json::array();
      for (const SeriesSpec& s : specs) doc.push_back(to_json(s));
      out << doc.dump(2) << '\n';
    } else if (args.latex) {
      for (const SeriesSpec& s : specs) out << to_latex(s) << '\n';
    } else {
      for (const SeriesSpec& s : specs)
        out << theorem_label(s.theorem) << ": c = " << s.prefactor.get_str()
            << "  z = " << s.argument.get_str() << "  ["
            << family_name(s.family) << "]\n";
    }
    return kExitOk;
  });
}

int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (args.power < 1) throw std::invalid_argument("--power must be >= 1");
    if (args.theorem.size() != 1)
      throw std::invalid_argument("--theorem must be a single rule A..F");
    const Int p = parse_radicand(args.p, args.prime_only);
    const PellInstance inst(p);
    const PellSolution sol =
        amplify_power(fundamental_solution(inst), args.power);
    const SeriesSpec spec = build(theorem_from_label(args.theorem[0]), sol);
    const EvalReport report = evaluate(spec, args.digits, args.options);

    if (args.json) {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << "sqrt(" << p << ") = " << report.decimal << '\n'
          << "rule: " << theorem_label(spec.theorem) << " ["
          << family_name(spec.family) << "]\n"
          << "terms: " << report.terms_used << '\n'
          << "tail bound: <= " << tail_display(report.tail_bound) << '\n'
          << "oracle: " << (report.oracle_agrees ? "agree" : "DISAGREE")
          << '\n';
    }
    if (!report.oracle_agrees) {
      err << "error: evaluation disagrees with the integer-root oracle "
             "beyond one unit in the last digit\n";
      return kExitOracleAlarm;
    }
    return kExitOk;
  });
}

int run_reproduce(const ReproduceArgs& args, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::vector<GoldenEntry> owned;
    const std::vector<GoldenEntry>* corpus = nullptr;
    if (args.corpus) {
      corpus = args.corpus;
    } else if (args.corpus_path) {
      owned = load_corpus_file(*args.corpus_path);
      corpus = &owned;
    } else {
      corpus = &golden_corpus();
    }

    std::optional<Int> filter;
    if (args.only_p) filter = Int(*args.only_p);

    std::map<Int, PellSolution> fundamentals;
    unsigned long checked = 0, mismatched = 0, alarms = 0;
    for (const GoldenEntry& e : *corpus) {
      if (filter && e.p != *filter) continue;
      ++checked;

      auto it = fundamentals.find(e.p);
      if (it == fundamentals.end())
        it = fundamentals.emplace(e.p, fundamental_solution(PellInstance(e.p)))
                 .first;
      const PellSolution sol = amplify_power(it->second, e.s);

      const char* diff = nullptr;
      if (sol.x() != e.n) {
        diff = "n";
      } else if (sol.y() != e.m) {
        diff = "m";
      } else if (!applicable(e.theorem, e.p, sol.y())) {
        diff = "applicability";
      } else {
        const SeriesSpec spec = build(e.theorem, sol);
        if (spec.prefactor != e.prefactor) {
          diff = "prefactor";
        } else if (spec.argument != e.argument) {
          diff = "argument";
        } else {
          const EvalReport rep = evaluate(spec, args.digits, args.options);
          if (!rep.oracle_agrees) {
            ++alarms;
            out << "alarm " << e.label << ": oracle tolerance exceeded\n";
          } else {
            out << "ok " << e.label << " (" << rep.terms_used << " terms)\n";
          }
          continue;
        }
      }
      ++mismatched;
      out << "mismatch " << e.label << ": " << diff << " differs\n";
    }

    if (checked == 0) {
      err << "error: no corpus entries selected\n";
      return kExitInvalidInput;
    }
    out << checked - mismatched - alarms << "/" << checked << " reproduced\n";
    if (mismatched > 0) return kExitCorpusMismatch;
    if (alarms > 0) return kExitOracleAlarm;
    return kExitOk;
  });
}

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Int p = parse_radicand(args.p, args.prime_only);
    const PellInstance inst(p);
    const PellSolution fund = fundamental_solution(inst);

    if (args.csv)
      out << "s,theorem,family,terms,digits_per_term\n";
    else
      out << "series menu for sqrt(" << p << ") at " << args.digits
          << " digits\n"
          << "  s rule family                     terms  digits/term\n";

    char rate_buf[32];
    for (unsigned long s = 1; s <= 4; ++s) {
      const PellSolution sol = amplify_power(fund, s);
      for (Theorem t : kAllTheorems) {
        if (!applicable(t, sol.p(), sol.y())) continue;
        const SeriesSpec spec = build(t, sol);
        const unsigned long terms = terms_needed(spec, args.digits);
        std::snprintf(rate_buf, sizeof rate_buf, "%.2f",
                      -log10_abs(spec.argument));
        if (args.csv) {
          out << s << ',' << theorem_label(t) << ",\""
              << family_name(spec.family) << "\"," << terms << ','
              << rate_buf << '\n';
        } else {
          out << std::setw(3) << s << ' ' << theorem_label(t) << "    "
              << std::left << std::setw(26) << family_name(spec.family)
              << std::right << std::setw(6) << terms << ' ' << std::setw(12)
              << rate_buf << '\n';
        }
      }
    }
    return kExitOk;
  });
}

}  // namespace pellroot::cli
