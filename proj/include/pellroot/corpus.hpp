#ifndef PELLROOT_CORPUS_HPP
#define PELLROOT_CORPUS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pellroot/expansion.hpp"

namespace pellroot {

// One published expansion: the radicand, the rule label, the solution power
// s, the solution (n, m) it uses, and the expected prefactor and argument.
// `label` identifies the entry ("sqrt2.s4.A").
struct GoldenEntry {
  std::string label;
  Int p;
  unsigned long s = 0;
  Theorem theorem = Theorem::A;
  Int n;
  Int m;
  Rat prefactor;
  Rat argument;
};

// The 72 expansions shipped with the library: p in {2,3,5,7,11,13}, two
// solution powers each, six rules per power. Parsed once from the embedded
// copy of data/golden_corpus.json.
const std::vector<GoldenEntry>& golden_corpus();

// Same data, embedded at build time.
const char* golden_corpus_json();

// Parses a corpus from JSON text. Validates structure and the Pell
// invariant of each entry; the rationals are taken as-is (they are the
// expected outputs a reproduction run compares against).
std::vector<GoldenEntry> parse_corpus(const std::string& json_text);

std::vector<GoldenEntry> load_corpus_file(const std::string& path);

}  // namespace pellroot

#endif
