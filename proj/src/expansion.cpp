#include "pellroot/expansion.hpp"

#include <cassert>
#include <stdexcept>

#include "pellroot/errors.hpp"

namespace pellroot {

char theorem_label(Theorem t) {
  switch (t) {
    case Theorem::A:
      return 'A';
    case Theorem::B:
      return 'B';
    case Theorem::C:
      return 'C';
    case Theorem::D:
      return 'D';
    case Theorem::E:
      return 'E';
    case Theorem::F:
      return 'F';
  }
  throw std::invalid_argument("unknown theorem");
}

Theorem theorem_from_label(char label) {
  if (label < 'A' || label > 'F')
    throw std::invalid_argument("theorem label must be one of A..F");
  return static_cast<Theorem>(label - 'A');
}

Family theorem_family(Theorem t) {
  switch (t) {
    case Theorem::A:
    case Theorem::B:
      return Family::f10_half;
    case Theorem::C:
    case Theorem::D:
      return Family::f21_quarter;
    case Theorem::E:
    case Theorem::F:
      return Family::f32_sixth;
  }
  throw std::invalid_argument("unknown theorem");
}

bool applicable(Theorem t, const Int& p, const Int& m) {
  const Int w = p * m * m;
  switch (t) {
    case Theorem::A:
    case Theorem::B:
    case Theorem::C:
      return true;
    case Theorem::D:
      return w * w > 4 * (w + 1);
    case Theorem::E:
      return 4 * (w + 1) * (w + 1) * (w + 1) > 27 * w * w;
    case Theorem::F:
      return 4 * w * w * w > 27 * (w + 1) * (w + 1);
  }
  throw std::invalid_argument("unknown theorem");
}

SeriesSpec build(Theorem t, const PellSolution& sol) {
  const Int& p = sol.p();
  const Int& n = sol.x();
  const Int& m = sol.y();
  if (!applicable(t, p, m)) {
    std::string msg = "rule ";
    msg += theorem_label(t);
    msg += " is not applicable to this solution";
    throw not_applicable_error(msg);
  }

  SeriesSpec spec;
  spec.p = p;
  spec.m = m;
  spec.n = n;
  spec.theorem = t;
  spec.family = theorem_family(t);

  const Int w = p * m * m;  // equals n^2 - 1
  switch (t) {
    case Theorem::A:
      spec.prefactor = make_rat(m * p, n);
      spec.argument = make_rat(1, w + 1);
      break;
    case Theorem::B:
      spec.prefactor = make_rat(n, m);
      spec.argument = make_rat(-1, w);
      break;
    case Theorem::C:
      spec.prefactor = make_rat(m * p, n);
      spec.argument = make_rat(4 * w, (w + 1) * (w + 1));
      break;
    case Theorem::D:
      spec.prefactor = make_rat(n, m);
      spec.argument = make_rat(-4 * (w + 1), w * w);
      break;
    case Theorem::E:
      spec.prefactor = make_rat(m * p, n);
      spec.argument = make_rat(27 * w * w, 4 * (w + 1) * (w + 1) * (w + 1));
      break;
    case Theorem::F:
      spec.prefactor = make_rat(n, m);
      spec.argument = make_rat(-27 * (w + 1) * (w + 1), 4 * w * w * w);
      break;
  }
  assert(abs(spec.argument) < 1);
  return spec;
}

BuildAllResult build_all(const Int& p,
                         const std::vector<unsigned long>& powers) {
  const PellInstance inst(p);
  const PellSolution fund = fundamental_solution(inst);
  BuildAllResult out;
  for (unsigned long s : powers) {
    if (s < 1) throw std::invalid_argument("build_all: powers must be >= 1");
    const PellSolution sol = amplify_power(fund, s);
    for (Theorem t : kAllTheorems) {
      if (applicable(t, sol.p(), sol.y()))
        out.specs.push_back(build(t, sol));
      else
        out.skipped.push_back({s, t});
    }
  }
  return out;
}

namespace {

nlohmann::json rat_to_json(const Rat& q) {
  return nlohmann::json{{"num", q.get_num().get_str()},
                        {"den", q.get_den().get_str()}};
}

Rat rat_from_json(const nlohmann::json& j) {
  const Int num(j.at("num").get<std::string>());
  const Int den(j.at("den").get<std::string>());
  return make_rat(num, den);
}

}  // namespace

nlohmann::json to_json(const SeriesSpec& spec) {
  return nlohmann::json{{"p", spec.p.get_str()},
                        {"m", spec.m.get_str()},
                        {"n", spec.n.get_str()},
                        {"theorem", std::string(1, theorem_label(spec.theorem))},
                        {"family", family_name(spec.family)},
                        {"prefactor", rat_to_json(spec.prefactor)},
                        {"argument", rat_to_json(spec.argument)}};
}

SeriesSpec spec_from_json(const nlohmann::json& j) {
  const std::string label = j.at("theorem").get<std::string>();
  if (label.size() != 1)
    throw std::invalid_argument("theorem label must be a single character");
  const Theorem t = theorem_from_label(label[0]);

  const Int p(j.at("p").get<std::string>());
  const Int m(j.at("m").get<std::string>());
  const Int n(j.at("n").get<std::string>());

  // Rebuild from (p, n, m) and require the stored constants to agree;
  // this re-checks the Pell invariant and both exact fractions.
  const SeriesSpec rebuilt = build(t, PellSolution(p, n, m));
  if (rat_from_json(j.at("prefactor")) != rebuilt.prefactor)
    throw std::invalid_argument("prefactor does not match (p, m, n, theorem)");
  if (rat_from_json(j.at("argument")) != rebuilt.argument)
    throw std::invalid_argument("argument does not match (p, m, n, theorem)");
  if (j.contains("family") &&
      j.at("family").get<std::string>() != family_name(rebuilt.family))
    throw std::invalid_argument("family does not match theorem");
  return rebuilt;
}

namespace {

std::string rat_latex(const Rat& q) {
  const bool neg = q < 0;
  const Rat a = abs(q);
  std::string body;
  if (a.get_den() == 1) {
    body = a.get_num().get_str();
  } else {
    body = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() +
           "}";
  }
  return neg ? "-" + body : body;
}

const char* family_kernel(Family family) {
  switch (family) {
    case Family::f10_half:
      return "\\frac{(\\tfrac{1}{2})_k}{k!}";
    case Family::f21_quarter:
      return "\\frac{(\\tfrac{1}{4})_k(\\tfrac{3}{4})_k}{(\\tfrac{3}{2})_k\\,"
             "k!}";
    case Family::f32_sixth:
      return "\\frac{(\\tfrac{1}{2})_k(\\tfrac{1}{6})_k(\\tfrac{5}{6})_k}{(\\"
             "tfrac{3}{4})_k(\\tfrac{5}{4})_k\\,k!}";
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

std::string to_latex(const SeriesSpec& spec) {
  std::string out = "\\sqrt{" + spec.p.get_str() + "} = ";
  out += rat_latex(spec.prefactor);
  out += "\\sum_{k=0}^{\\infty}";
  out += family_kernel(spec.family);
  out += "\\left(" + rat_latex(spec.argument) + "\\right)^{k}";
  return out;
}

}  // namespace pellroot
