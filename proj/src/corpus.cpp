#include "pellroot/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pellroot {

namespace {

Rat rat_field(const nlohmann::json& j) {
  const Int num(j.at("num").get<std::string>());
  const Int den(j.at("den").get<std::string>());
  return make_rat(num, den);
}

GoldenEntry entry_from_json(const nlohmann::json& j) {
  GoldenEntry e;
  e.label = j.at("label").get<std::string>();
  e.p = Int(j.at("p").get<std::string>());
  e.s = std::stoul(j.at("s").get<std::string>());
  const std::string t = j.at("theorem").get<std::string>();
  if (t.size() != 1)
    throw std::invalid_argument("corpus entry " + e.label +
                                ": theorem must be a single letter");
  e.theorem = theorem_from_label(t[0]);
  e.n = Int(j.at("n").get<std::string>());
  e.m = Int(j.at("m").get<std::string>());
  e.prefactor = rat_field(j.at("prefactor"));
  e.argument = rat_field(j.at("argument"));
  if (e.s < 1)
    throw std::invalid_argument("corpus entry " + e.label + ": s must be >= 1");
  // The cited solution must satisfy the Pell invariant; the rationals are
  // kept verbatim, they are what a reproduction run compares against.
  const PellSolution cited(e.p, e.n, e.m);
  static_cast<void>(cited);
  return e;
}

}  // namespace

std::vector<GoldenEntry> parse_corpus(const std::string& json_text) {
  const nlohmann::json doc = nlohmann::json::parse(json_text);
  if (!doc.is_array())
    throw std::invalid_argument("corpus root must be an array");
  std::vector<GoldenEntry> out;
  out.reserve(doc.size());
  for (const auto& item : doc) out.push_back(entry_from_json(item));
  if (out.empty()) throw std::invalid_argument("corpus is empty");
  return out;
}

std::vector<GoldenEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

const std::vector<GoldenEntry>& golden_corpus() {
  static const std::vector<GoldenEntry> corpus =
      parse_corpus(golden_corpus_json());
  return corpus;
}

}  // namespace pellroot
