#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsres/apery.hpp"
#include "nsres/cli.hpp"
#include "nsres/emit.hpp"
#include "nsres/m4.hpp"
#include "nsres/oracle.hpp"
#include "testutil.hpp"

using nsres::BettiTable;
using nsres::DifferentialMatrix;
using nsres::Int;
using nsres::NumericalSemigroup;

namespace {

NumericalSemigroup NS(std::vector<unsigned long> g) {
  return NumericalSemigroup::from_generators(std::move(g));
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nsres::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("json round trips") {
  auto S = NS({4, 5, 7});

  CHECK(nsres::semigroup_from_json(nsres::json_text(S)) == S);

  auto sig = nsres::face_signature(S);
  CHECK(nsres::signature_from_json(nsres::json_text(sig)) == sig);

  auto P = nsres::kunz_poset(S);
  CHECK(nsres::poset_from_json(nsres::json_text(P)) == P);

  auto B = nsres::betti_via_tensor(S, 3);
  CHECK(nsres::betti_from_json(nsres::json_text(B)) == B);

  auto R = nsres::oracle_betti_ideal(S, nsres::GradedKind::Qmin, 1);
  CHECK(nsres::betti_from_json(nsres::json_text(R)) == R);

  for (unsigned long d = 1; d <= 3; ++d) {
    auto M = nsres::apery_differential(S, d);
    CHECK(nsres::matrix_from_json(nsres::json_text(M)) == M);
    auto sym = nsres::apery_symbolic_differential(4, d);
    CHECK(nsres::symbolic_from_json(nsres::json_text(sym)) == sym);
  }

  // A minimized matrix carries its face; that must survive the trip too.
  auto nonci = nsres::nonci_symbolic(S, 2);
  REQUIRE(nonci.face.has_value());
  CHECK(nsres::symbolic_from_json(nsres::json_text(nonci)) == nonci);

  auto ci = nsres::ci_differential(NS({4, 5, 6}), 3);
  CHECK(nsres::matrix_from_json(nsres::json_text(ci)) == ci);
}

TEST_CASE("json output is stable and validated") {
  auto S = NS({4, 5, 7});
  auto M = nsres::apery_differential(S, 2);
  std::string text = nsres::json_text(M);
  CHECK(text == nsres::json_text(M));
  CHECK(nsres::json_text(nsres::matrix_from_json(text)) == text);

  CHECK_THROWS_AS(nsres::semigroup_from_json("not json"), nsres::Error);
  CHECK_THROWS_AS(nsres::semigroup_from_json("{\"m\": 4}"), nsres::Error);
  CHECK_THROWS_AS(nsres::betti_from_json("{\"values\": [1]}"), nsres::Error);

  // A term whose recorded degree contradicts the labels is a damaged
  // fixture, not a different matrix.
  auto doc = nlohmann::json::parse(text);
  doc["entries"][0]["terms"][0]["degree"] =
      doc["entries"][0]["terms"][0]["degree"].get<long>() + 1;
  CHECK_THROWS_AS(nsres::matrix_from_json(doc.dump()), nsres::Error);
}

TEST_CASE("latex of the ray second step") {
  auto M = nsres::ray_symbolic(NS({4, 5}), 2);
  std::string tex = nsres::latex(M);
  CHECK(tex ==
        "\\begin{array}{r|cc}\n"
        " & e_{01} & e_{13} \\\\\n"
        "\\hline\n"
        "e_{0} & x_{1} & -y^{b_{13}} \\\\\n"
        "e_{1} & -y & x_{1}^{3} \\\\\n"
        "\\end{array}\n");
}

TEST_CASE("latex of the minimized facet step keeps b symbols") {
  auto M = nsres::nonci_symbolic(NS({4, 5, 7}), 2);
  std::string tex = nsres::latex(M);
  CHECK(tex.find("x_{1}^{2}") != std::string::npos);
  CHECK(tex.find("-y^{b_{12}}") != std::string::npos);
  CHECK(tex.find("-y^{b_{33}} x_{1}") != std::string::npos);
  CHECK(tex.find("e_{33}") != std::string::npos);
  // Zero entries render as dots, one per missing entry.
  CHECK(tex.find("\\cdot") != std::string::npos);
}

TEST_CASE("latex of concrete matrices and edge shapes") {
  auto S = NS({4, 5, 7});
  std::string tex = nsres::latex(nsres::apery_differential(S, 1));
  CHECK(tex ==
        "\\begin{array}{r|cccc}\n"
        " & e_{0} & e_{1} & e_{2} & e_{3} \\\\\n"
        "\\hline\n"
        "e & t^{4} & t^{5} & t^{10} & t^{7} \\\\\n"
        "\\end{array}\n");

  DifferentialMatrix empty(S, {}, {});
  CHECK(nsres::latex(empty) == "\\begin{array}{}\n\\end{array}\n");

  auto names = nsres::variable_names(nsres::GradedKind::Q, S);
  auto gens = nsres::toric_generators(S);
  CHECK(nsres::latex(gens.front(), names) == "x_1^{2} - x_2");
}

TEST_CASE("dot rendering of the divisibility poset") {
  std::string graph = nsres::dot(nsres::kunz_poset(NS({4, 5, 7})));
  CHECK(graph ==
        "digraph kunz {\n"
        "  rankdir=BT;\n"
        "  0 [label=\"0\"];\n"
        "  1 [label=\"1\"];\n"
        "  2 [label=\"2\"];\n"
        "  3 [label=\"3\"];\n"
        "  0 -> 1;\n"
        "  0 -> 3;\n"
        "  1 -> 2;\n"
        "}\n");
}

TEST_CASE("cli fixtures") {
  auto apery = run_cli({"apery", "4", "5", "7"});
  CHECK(apery.code == 0);
  CHECK(apery.out.find("apery tail: 5 10 7") != std::string::npos);
  CHECK(apery.out.find("med: false") != std::string::npos);

  auto apery_json = run_cli({"apery", "4", "5", "7", "--format", "json"});
  CHECK(apery_json.code == 0);
  auto doc = nlohmann::json::parse(apery_json.out);
  CHECK(doc["schema"] == "nsres/1");
  CHECK(doc["m"] == 4);
  CHECK(doc["apery"] == nlohmann::json({5, 10, 7}));
  CHECK(doc["med"] == false);

  auto betti = run_cli({"betti", "4", "5", "6", "7", "--steps", "4"});
  CHECK(betti.code == 0);
  CHECK(betti.out == "1 4 12 36 108\n");

  auto golod = run_cli({"golod", "4", "5", "7", "--steps", "10"});
  CHECK(golod.code == 0);
  CHECK(golod.out.substr(0, golod.out.find('\n')) ==
        "Golod through degree 10: true");

  auto ci = run_cli({"golod", "4", "5", "6", "--steps", "10"});
  CHECK(ci.code == 0);
  CHECK(ci.out.find("Golod through degree 10: false") != std::string::npos);

  auto supplied =
      run_cli({"golod", "4", "5", "7", "--steps", "8", "--piq", "3,2"});
  CHECK(supplied.code == 0);
  CHECK(supplied.out.find("[supplied]") != std::string::npos);

  auto dot = run_cli({"kunz", "4", "5", "7", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph kunz {") == 0);

  auto same = run_cli({"same-face", "4,5,7", "4,13,31", "--format", "json"});
  CHECK(same.code == 0);
  CHECK(nlohmann::json::parse(same.out)["same_face"] == true);

  auto grm = run_cli({"grm", "5", "6", "19"});
  CHECK(grm.code == 0);
  CHECK(grm.out.find("hilbert: 1 3 3 4 5 5 5") != std::string::npos);
  CHECK(grm.out.find("quadratic through 6: false (witness: x_1^5)") !=
        std::string::npos);

  auto koszul = run_cli(
      {"koszul", "8", "9", "10", "12", "23", "--steps", "2", "--degree-bound",
       "4"});
  CHECK(koszul.code == 0);
  CHECK(koszul.out.find("linear through step 2, degree 4: true") !=
        std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"apery", "4", "6"}).code == 1);               // gcd 2
  CHECK(run_cli({"m4", "5", "6", "7"}).code == 1);             // wrong m
  CHECK(run_cli({"betti", "4", "5", "7", "--bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);                                // no subcommand
  CHECK(run_cli({"apery"}).code == 2);                         // no generators
  CHECK(run_cli({"apery", "4", "0"}).code == 2);               // not positive
  CHECK(run_cli({"betti", "4", "5", "7", "--field", "fp:6"}).code == 2);
  CHECK(run_cli({"same-face", "4,x", "4,5,7"}).code == 2);
  CHECK(run_cli({"golod", "4", "5", "7", "--piq", "3,two"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);

  auto err = run_cli({"apery", "4", "6"});
  CHECK(err.out.empty());
  CHECK(err.err.find("gcd") != std::string::npos);
}

TEST_CASE("cli output is deterministic") {
  for (const auto& args :
       {std::vector<std::string>{"resolve", "4", "5", "7", "--steps", "3",
                                 "--format", "json"},
        std::vector<std::string>{"m4", "4", "5", "7", "--steps", "3",
                                 "--symbolic", "--format", "latex"},
        std::vector<std::string>{"kunz", "4", "13", "31", "--format", "json"}}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.size() > 0);
  }
}

TEST_CASE("cli symbolic resolve agrees with substitution") {
  auto sym = run_cli({"resolve", "4", "5", "7", "--steps", "2", "--symbolic",
                      "--format", "json"});
  REQUIRE(sym.code == 0);
  auto doc = nlohmann::json::parse(sym.out);
  REQUIRE(doc["steps"].size() == 2);
  auto M = nsres::symbolic_from_json(doc["steps"][1].dump());
  auto S = NS({4, 5, 7});
  CHECK(nsres::substitute(M, S) == nsres::apery_differential(S, 2));
}
