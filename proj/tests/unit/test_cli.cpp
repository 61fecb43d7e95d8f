#include <doctest.h>

#include "courant/calc/text.hpp"
#include "courant/cli/run.hpp"
#include "courant/errors.hpp"

using namespace courant;
using namespace courant::cli;

namespace {

RunResult run_text(const std::string& model, const std::string& command, std::vector<std::string> args = {}) {
  return run(command, args, parse_model(model), {});
}

}  // namespace

TEST_CASE("model parsing") {
  const Model m = parse_model(R"({"chart": ["x", "y"]})");
  CHECK(m.chart->dim() == 2);
  CHECK(m.poisson.is_zero());
  CHECK(m.dirac.empty());

  // Term lists and text agree; indices given out of order flip the sign.
  const Model terms = parse_model(R"({"chart": ["x1", "x2"], "poisson": [
      {"indices": [2, 1], "exponents": [1, 0], "numerator": -3, "denominator": 2},
      {"indices": [1, 2], "exponents": [0, 2], "numerator": "1/2"}]})");
  const Model text = parse_model(R"({"chart": ["x1", "x2"], "poisson": "(3/2 x1 + 1/2 x2^2) d/dx1^d/dx2"})");
  CHECK(terms.poisson == text.poisson);

  const Model b = parse_model(R"({"bialgebra": {"dim": 2, "c": [[1, 2, 2, 1]]},
      "subalgebras": {"g": {"factor": "g"}, "r": {"r": [[0, 1], [-1, 0]]}}})");
  REQUIRE(b.bialgebra);
  CHECK(b.bialgebra->c(1, 0, 1) == -1);
  CHECK(b.subalgebras.size() == 2);
}

TEST_CASE("model errors") {
  CHECK_THROWS_AS(parse_model(R"({"chart": ["x"], "poisson": "0", "chart": ["y"]})"), ParseError);
  try {
    parse_model("{\"chart\": [\"x\"],\n \"dirac\": {\"L\": {\"null\": []},\n \"L\": {\"null\": []}}}");
    FAIL("duplicate block names accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_model("{\"chart\": [\"x\"],\n  \"options\": {\"point\": [0.5]}}");
    FAIL("float accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 25);
  }
  CHECK_THROWS_AS(parse_model("{\"chart\": [\"x\"]"), ParseError);
  CHECK_THROWS_AS(parse_model(R"({"chart": ["x"], "colour": 1})"), ValidationError);
  CHECK_THROWS_AS(parse_model(R"({"chart": ["x"], "dirac": {"L": {"graph_form": "dx", "null": []}}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_model(R"({"dirac": {"L": {"on": "target", "null": []}}})"), ValidationError);
  CHECK_THROWS_AS(parse_model(R"({"bialgebra": {"dim": 2, "c": [[1, 1, 2, 1]]}})"), ValidationError);
  CHECK_THROWS_AS(parse_model(R"({"bialgebra": {"dim": 2}, "subalgebras": {"r": {"r": [[0, 1], [1, 0]]}}})"),
                  ValidationError);

  // A command that needs a Poisson structure cites the Schouten residual.
  const std::string bad = R"({"chart": ["x1", "x2", "x3", "x4"], "poisson": "d/dx1^d/dx2 + x1 d/dx3^d/dx4"})";
  CHECK_NOTHROW(parse_model(bad));
  try {
    run_text(bad, "verify-axioms");
    FAIL("non-Poisson model accepted");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("-2 d/dx2^d/dx3^d/dx4") != std::string::npos);
  }
}

TEST_CASE("dispatch") {
  const std::string flat = R"({"chart": ["x1", "x2", "x3"], "dirac": {
      "G": {"graph_bivector": "x1 d/dx1^d/dx2"},
      "N": {"null": ["d/dx3"]}}})";
  CHECK_THROWS_AS(run_text(flat, "bogus"), std::invalid_argument);
  CHECK_THROWS_AS(run_text(flat, "check-dirac"), std::invalid_argument);
  CHECK_THROWS_AS(run_text(flat, "check-dirac", {"missing"}), std::invalid_argument);
  CHECK_THROWS_AS(run_text(flat, "from-quotient"), std::invalid_argument);

  const auto g = run_text(flat, "check-dirac", {"G"});
  CHECK(g.report.passed());
  CHECK(g.lines.back() == "DIRAC: yes");
  CHECK(run_text(flat, "check-dirac", {"N"}).report.passed());

  const auto r = run_text(flat, "reduce", {"G", "x1", "x2"});
  CHECK(r.report.passed());
  CHECK(r.lines.back() == "{x1, x2} = x1");
  const auto n = run_text(flat, "reduce", {"N", "x3", "x1"});
  CHECK(n.report.status() == Status::Fail);

  const std::string bialg = R"({"bialgebra": {"dim": 2, "c": [[1, 2, 2, 1]], "f": [[1, 2, 2, 1]]},
      "subalgebras": {"g": {"factor": "g"}, "mixed": {"basis": [[1, 0, 0, 0], [0, 0, 1, 0]]}}})";
  CHECK(run_text(bialg, "bialgebra-verify").report.passed());
  CHECK(run_text(bialg, "bialgebra-check", {"g"}).report.passed());
  CHECK(run_text(bialg, "bialgebra-check", {"mixed"}).report.status() == Status::Fail);
  const auto s = run_text(bialg, "bialgebra-search", {"0,1,-1,1"});
  CHECK(s.lines.back().rfind("searched 3,", 0) == 0);
}

TEST_CASE("report format") {
  RunResult r;
  r.report.add("A", "x", Status::Pass);
  r.report.add("B", "", Status::Inconclusive, "cap=1");
  r.lines.push_back("value");
  CHECK(format_report("cmd --model m.json", r) ==
        std::string("courant-kit ") + kVersion + "\ncommand: cmd --model m.json\n---\nA PASS @ (x)\nB INCONCLUSIVE cap=1\nvalue\nSTATUS: INCONCLUSIVE\n");
  CHECK(exit_code(Status::Pass) == 0);
  CHECK(exit_code(Status::Fail) == 1);
  CHECK(exit_code(Status::Inconclusive) == 2);
}
