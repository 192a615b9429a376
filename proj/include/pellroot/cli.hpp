#ifndef PELLROOT_CLI_HPP
#define PELLROOT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pellroot/bigfix.hpp"
#include "pellroot/corpus.hpp"

namespace pellroot::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNotApplicable = 3;
inline constexpr int kExitOracleAlarm = 4;
inline constexpr int kExitCorpusMismatch = 5;

struct SolveArgs {
  std::string p;
  unsigned long power = 1;
  bool json = false;
  bool prime_only = false;
};

struct SeriesArgs {
  std::string p;
  unsigned long power = 1;
  std::string theorem = "all";  // "A".."F" or "all"
  bool json = false;
  bool latex = false;
  bool prime_only = false;
};

struct EvalArgs {
  std::string p;
  unsigned long power = 1;
  std::string theorem = "A";
  unsigned long digits = 50;
  bool json = false;
  bool prime_only = false;
  EvalOptions options;
};

struct ReproduceArgs {
  std::optional<std::string> only_p;
  std::optional<std::string> corpus_path;          // overrides the embedded corpus
  const std::vector<GoldenEntry>* corpus = nullptr; // in-process override (tests)
  unsigned long digits = 30;
  EvalOptions options;
};

struct BenchArgs {
  std::string p;
  unsigned long digits = 100;
  bool csv = false;
  bool prime_only = false;
};

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int run_series(const SeriesArgs& args, std::ostream& out, std::ostream& err);
int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int run_reproduce(const ReproduceArgs& args, std::ostream& out,
                  std::ostream& err);
int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace pellroot::cli

#endif
