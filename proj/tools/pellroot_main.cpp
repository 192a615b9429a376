#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pellroot/cli.hpp"

namespace cli = pellroot::cli;

int main(int argc, char** argv) {
  CLI::App app{"square roots from Pell-accelerated hypergeometric series"};
  app.require_subcommand(1);

  pellroot::EvalOptions eval_options;
  if (const char* cap = std::getenv("PELLROOT_MAX_DIGITS")) {
    try {
      eval_options.max_digits = std::stoul(cap);
    } catch (...) {
      std::cerr << "error: PELLROOT_MAX_DIGITS must be a positive integer\n";
      return cli::kExitInvalidInput;
    }
  }

  cli::SolveArgs solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "fundamental Pell solution for p");
  solve_cmd->add_option("p", solve.p, "radicand (positive nonsquare integer)")
      ->required();
  solve_cmd->add_option("--power,-s", solve.power, "solution power s >= 1")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--json", solve.json, "machine-readable output");
  solve_cmd->add_flag("--prime-only", solve.prime_only, "require p prime");

  cli::SeriesArgs series;
  CLI::App* series_cmd =
      app.add_subcommand("series", "series constants for sqrt(p)");
  series_cmd->add_option("p", series.p, "radicand")->required();
  series_cmd->add_option("--power,-s", series.power, "solution power s >= 1")
      ->check(CLI::PositiveNumber);
  series_cmd->add_option("--theorem,-t", series.theorem,
                         "rule A..F, or all applicable");
  series_cmd->add_flag("--json", series.json, "machine-readable output");
  series_cmd->add_flag("--latex", series.latex, "displayed-equation form");
  series_cmd->add_flag("--prime-only", series.prime_only, "require p prime");

  cli::EvalArgs eval;
  eval.options = eval_options;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate sqrt(p) to a digit count");
  eval_cmd->add_option("p", eval.p, "radicand")->required();
  eval_cmd->add_option("--power,-s", eval.power, "solution power s >= 1")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--theorem,-t", eval.theorem, "rule A..F");
  eval_cmd->add_option("--digits,-d", eval.digits,
                       "fractional digits to produce");
  eval_cmd->add_flag("--json", eval.json, "machine-readable output");
  eval_cmd->add_flag("--prime-only", eval.prime_only, "require p prime");

  cli::ReproduceArgs reproduce;
  reproduce.options = eval_options;
  std::string only_p, corpus_path;
  CLI::App* reproduce_cmd = app.add_subcommand(
      "reproduce", "rebuild and recheck the published expansion corpus");
  CLI::Option* only_opt =
      reproduce_cmd->add_option("--only-p", only_p, "restrict to one radicand");
  CLI::Option* corpus_opt = reproduce_cmd->add_option(
      "--corpus", corpus_path, "corpus JSON file (default: embedded)");
  reproduce_cmd->add_option("--digits,-d", reproduce.digits,
                            "evaluation digits per entry");

  cli::BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "terms needed per rule and power for a digit target");
  bench_cmd->add_option("p", bench.p, "radicand")->required();
  bench_cmd->add_option("--digits,-d", bench.digits, "digit target");
  bench_cmd->add_flag("--csv", bench.csv, "CSV output");
  bench_cmd->add_flag("--prime-only", bench.prime_only, "require p prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInvalidInput;
  }

  if (app.got_subcommand(solve_cmd))
    return cli::run_solve(solve, std::cout, std::cerr);
  if (app.got_subcommand(series_cmd))
    return cli::run_series(series, std::cout, std::cerr);
  if (app.got_subcommand(eval_cmd))
    return cli::run_eval(eval, std::cout, std::cerr);
  if (app.got_subcommand(reproduce_cmd)) {
    if (only_opt->count() > 0) reproduce.only_p = only_p;
    if (corpus_opt->count() > 0) reproduce.corpus_path = corpus_path;
    return cli::run_reproduce(reproduce, std::cout, std::cerr);
  }
  if (app.got_subcommand(bench_cmd))
    return cli::run_bench(bench, std::cout, std::cerr);
  return cli::kExitInvalidInput;
}
