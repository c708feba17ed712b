// uaw — exact computations in the universal Askey-Wilson algebra over Q(q).
//
// Exit codes: 0 success (or a true predicate), 1 false predicate,
// 2 usage/parse error, 3 verification failure or internal error.

#include "uaw/expr.hpp"
#include "uaw/lambda_rep.hpp"
#include "uaw/morphism.hpp"
#include "uaw/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using namespace uaw;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  std::string q_at;  // empty = no specialization requested
  int max_degree = 5;
  std::uint64_t seed = 12345;

  VerifyOptions verify_options() const { return {max_degree, seed}; }
};

// ---- JSON shapes ----

ordered_json poly_json(const LaurentQ& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [e, v] : p.terms()) arr.push_back(ordered_json::array({e, rat_str_slash(v)}));
  return arr;
}

ordered_json coeff_json(const RatFuncQ& c) {
  return ordered_json{{"num", poly_json(c.num())}, {"den", poly_json(c.den())}};
}

ordered_json element_json(const DeltaElement& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : x.terms()) {
    ordered_json mono = ordered_json::array();
    for (int e : m.tuple()) mono.push_back(e);
    terms.push_back(ordered_json{{"mono", mono}, {"coeff", coeff_json(c)}});
  }
  return ordered_json{{"terms", terms}};
}

ordered_json omega_json(const OmegaElement& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : x.terms()) {
    ordered_json mono = ordered_json::array();
    for (int e : m.tuple()) mono.push_back(e);
    terms.push_back(ordered_json{{"mono", mono}, {"coeff", coeff_json(c)}});
  }
  return ordered_json{{"terms", terms}};
}

ordered_json comm_json(const CommPoly& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : x.terms()) {
    ordered_json mono = ordered_json::array();
    for (int e : m.tuple()) mono.push_back(e);
    terms.push_back(ordered_json{{"mono", mono}, {"coeff", coeff_json(c)}});
  }
  return ordered_json{{"terms", terms}};
}

ordered_json mat2_json(const LaurentMat2& m) {
  auto entry = [](const LaurentL& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(ordered_json::array({e, coeff_json(c)}));
    return arr;
  };
  return ordered_json{
      {"e11", entry(m.e11)}, {"e12", entry(m.e12)}, {"e21", entry(m.e21)}, {"e22", entry(m.e22)}};
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// ---- advisory q specialization (text mode only) ----

std::string specialized_str(const DeltaElement& x, const QRational& q0) {
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    QRational v = c.specialize(q0);
    if (v == 0) continue;
    bool neg = v < 0;
    QRational mag = neg ? QRational(-v) : v;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_unit())
      out += rat_str(mag);
    else if (mag == 1)
      out += m.str();
    else
      out += rat_str(mag) + "*" + m.str();
  }
  return out.empty() ? "0" : out;
}

void print_element(const DeltaElement& x, const Globals& g) {
  if (g.json) {
    emit(element_json(x));
    return;
  }
  std::cout << x.str() << "\n";
  if (!g.q_at.empty()) {
    QRational q0 = rat_parse(g.q_at);
    std::string line;
    try {
      line = specialized_str(x, q0);
    } catch (const pole_error&) {
      line = "pole, not specializable";
    }
    std::cout << "at q = " << rat_str(q0) << ": " << line << "\n";
  }
}

// ---- predicates ----

int member_command(const std::string& kind, const DeltaElement& x, const Globals& g) {
  bool result = false;
  std::string reason;
  CommPoly bar = abelianize(x);
  auto blocked_by = [&bar](bool want_i_zero, bool want_j_zero, bool want_k_zero) {
    std::string hit;
    for (const auto& [m, c] : bar.terms()) {
      if (want_i_zero && m.i > 0) hit = "Ab";
      if (want_j_zero && m.j > 0) hit = "Bb";
      if (want_k_zero && m.k > 0) hit = "Cb";
    }
    return hit;
  };
  if (kind == "AB" || kind == "BC" || kind == "AC") {
    GenPair pair = kind == "AB" ? GenPair::AB : kind == "BC" ? GenPair::BC : GenPair::AC;
    result = in_subalgebra(x, pair);
    if (result) {
      reason = "yes";
    } else {
      std::string hit = blocked_by(kind == "BC", kind == "AC", kind == "AB");
      reason = "no: abelianization involves " + hit;
    }
  } else if (kind == "ideal") {
    result = in_commutator_ideal(x);
    reason = result ? "yes" : "no: abelianization is nonzero";
  } else if (kind == "ideal1") {
    result = in_commutator_ideal_plus_1(x);
    reason = result ? "yes" : "no: abelianization is not constant";
  } else {
    std::cerr << "unknown membership kind: " << kind << " (expected AB, BC, AC, ideal, ideal1)\n";
    return 2;
  }
  if (g.json)
    emit(ordered_json{{"result", result}, {"reason", reason}});
  else
    std::cout << reason << "\n";
  return result ? 0 : 1;
}

int central_command(const DeltaElement& x, const Globals& g) {
  bool result = true;
  std::string reason = "yes";
  for (Letter l : {Letter::A, Letter::B, Letter::C}) {
    if (!commutator(x, DeltaElement::generator(l)).is_zero()) {
      result = false;
      reason = std::string("no: does not commute with ") + letter_name(l);
      break;
    }
  }
  if (g.json)
    emit(ordered_json{{"result", result}, {"reason", reason}});
  else
    std::cout << reason << "\n";
  return result ? 0 : 1;
}

// ---- verify ----

ordered_json suite_json(const SuiteReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks)
    checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return ordered_json{
      {"suite", rep.suite}, {"ok", rep.ok()}, {"summary", rep.summary()}, {"checks", checks}};
}

int verify_command(const std::string& suite, const Globals& g) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = run_all_suites(g.verify_options());
  } else {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::cerr << "unknown suite: " << suite << " (expected all or one of";
      for (const auto& n : names) std::cerr << " " << n;
      std::cerr << ")\n";
      return 2;
    }
    reports.push_back(run_suite(suite, g.verify_options()));
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  if (g.json) {
    ordered_json suites = ordered_json::array();
    for (const auto& r : reports) suites.push_back(suite_json(r));
    emit(ordered_json{{"suites", suites}, {"ok", ok}});
    return ok ? 0 : 3;
  }

  for (const auto& r : reports) {
    if (reports.size() == 1)
      std::cout << r.summary() << "\n";
    else
      std::cout << r.suite << ": " << r.summary() << "\n";
    for (const auto& c : r.checks)
      if (!c.pass) std::cout << "  FAIL " << c.name << ": " << c.detail << "\n";
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic kernel for the universal Askey-Wilson algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "emit canonical JSON instead of text");
  app.add_option("--q-at", g.q_at,
                 "advisory: also print the result with q specialized at this rational "
                 "(text output of element commands only)");
  app.add_option("--max-degree", g.max_degree, "degree cap for the randomized verify checks")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for the randomized verify checks");

  std::string expr_a, expr_b, word, kind, suite;

  auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
  normalize->add_option("expr", expr_a, "expression")->required();

  auto* comm = app.add_subcommand("commutator", "normal form of [x, y]");
  comm->add_option("x", expr_a, "left expression")->required();
  comm->add_option("y", expr_b, "right expression")->required();

  auto* aut = app.add_subcommand("auto", "apply a modular-group word (letters r, R, s)");
  aut->add_option("word", word, "word over r, R, s; rightmost letter acts first")->required();
  aut->add_option("expr", expr_a, "expression")->required();

  auto* abel = app.add_subcommand("abelianize", "image in the commutative quotient");
  abel->add_option("expr", expr_a, "expression")->required();

  auto* pi = app.add_subcommand("pi", "image under the 2x2 Laurent representation");
  pi->add_option("expr", expr_a, "expression")->required();

  auto* deg = app.add_subcommand("degree", "filtration degree");
  deg->add_option("expr", expr_a, "expression")->required();

  auto* omega = app.add_subcommand("omega-basis", "rewrite in the Omega basis");
  omega->add_option("expr", expr_a, "expression")->required();

  auto* member = app.add_subcommand("member", "membership predicates (exit 0 yes, 1 no)");
  member->add_option("kind", kind, "AB, BC, AC, ideal, or ideal1")->required();
  member->add_option("expr", expr_a, "expression")->required();

  auto* central = app.add_subcommand("central", "does the element commute with everything?");
  central->add_option("expr", expr_a, "expression")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "diamond, casimir, psl2z, pi, filtration, center, onsager, ideal, or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!g.q_at.empty()) (void)rat_parse(g.q_at);  // validate up front

    if (*normalize) {
      print_element(parse_element(expr_a), g);
      return 0;
    }
    if (*comm) {
      print_element(commutator(parse_element(expr_a), parse_element(expr_b)), g);
      return 0;
    }
    if (*aut) {
      print_element(psl2z_word(word, parse_element(expr_a)), g);
      return 0;
    }
    if (*abel) {
      CommPoly p = abelianize(parse_element(expr_a));
      if (g.json)
        emit(comm_json(p));
      else
        std::cout << p.str() << "\n";
      return 0;
    }
    if (*pi) {
      LaurentMat2 m = pi_map(parse_element(expr_a));
      if (g.json)
        emit(mat2_json(m));
      else
        std::cout << m.str() << "\n";
      return 0;
    }
    if (*deg) {
      auto d = parse_element(expr_a).filtration_degree();
      if (g.json)
        emit(ordered_json{{"degree", d ? ordered_json(*d) : ordered_json(nullptr)}});
      else
        std::cout << (d ? std::to_string(*d) : "-inf") << "\n";
      return 0;
    }
    if (*omega) {
      OmegaElement om = to_omega_basis(parse_element(expr_a));
      if (g.json)
        emit(omega_json(om));
      else
        std::cout << om.str() << "\n";
      return 0;
    }
    if (*member) return member_command(kind, parse_element(expr_a), g);
    if (*central) return central_command(parse_element(expr_a), g);
    if (*verify) return verify_command(suite, g);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const eval_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
