#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "pellroot/corpus.hpp"
#include "pellroot/errors.hpp"

using namespace pellroot;

TEST_CASE("embedded corpus has the published shape") {
  const auto& corpus = golden_corpus();
  REQUIRE(corpus.size() == 72);

  std::set<std::string> labels;
  std::map<std::string, int> per_radicand;
  for (const GoldenEntry& e : corpus) {
    CHECK(labels.insert(e.label).second);
    ++per_radicand[e.p.get_str()];

    // label encodes (p, s, rule)
    const std::string expect = "sqrt" + e.p.get_str() + ".s" +
                               std::to_string(e.s) + "." +
                               theorem_label(e.theorem);
    CHECK(e.label == expect);
    CHECK(applicable(e.theorem, e.p, e.m));
  }
  REQUIRE(per_radicand.size() == 6);
  for (const char* p : {"2", "3", "5", "7", "11", "13"}) {
    CHECK(per_radicand.at(p) == 12);
  }
}

TEST_CASE("corpus entries carry solutions on the curve") {
  for (const GoldenEntry& e : golden_corpus()) {
    CHECK(e.n * e.n - e.p * e.m * e.m == 1);
    CHECK(abs(e.argument) < 1);
    CHECK(e.prefactor > 0);
  }
}

TEST_CASE("parser keeps rationals verbatim") {
  // A perturbed constant must parse; only a reproduction run flags it.
  nlohmann::json doc = nlohmann::json::parse(golden_corpus_json());
  const Int num(doc[0]["argument"]["num"].get<std::string>());
  doc[0]["argument"]["num"] = Int(num + 1).get_str();
  const auto corpus = parse_corpus(doc.dump());
  CHECK(corpus.size() == 72);
  CHECK(corpus[0].argument == make_rat(num + 1,
                                       Int(doc[0]["argument"]["den"]
                                               .get<std::string>())));
}

TEST_CASE("parser rejects structural damage") {
  nlohmann::json doc = nlohmann::json::parse(golden_corpus_json());

  nlohmann::json bad = doc;
  bad[0]["theorem"] = "Q";
  CHECK_THROWS_AS(parse_corpus(bad.dump()), std::invalid_argument);

  bad = doc;
  bad[0]["n"] = "578";  // off the curve
  CHECK_THROWS_AS(parse_corpus(bad.dump()), invalid_solution_error);

  bad = doc;
  bad[0].erase("m");
  CHECK_THROWS(parse_corpus(bad.dump()));

  CHECK_THROWS_AS(parse_corpus("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus("[]"), std::invalid_argument);
  CHECK_THROWS(parse_corpus("not json"));
}

TEST_CASE("corpus file loading") {
  const auto path = std::filesystem::temp_directory_path() /
                    "pellroot_corpus_roundtrip.json";
  {
    std::ofstream out(path);
    out << golden_corpus_json();
  }
  const auto corpus = load_corpus_file(path.string());
  CHECK(corpus.size() == golden_corpus().size());
  CHECK(corpus[0].label == golden_corpus()[0].label);
  std::remove(path.string().c_str());

  CHECK_THROWS_AS(load_corpus_file("/nonexistent/corpus.json"),
                  std::runtime_error);
}
