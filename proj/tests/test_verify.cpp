#include "doctest.h"
#include "json.hpp"
#include "reflex/errors.hpp"
#include "reflex/verify/evaluator.hpp"
#include "reflex/verify/paper.hpp"
#include "reflex/verify/properties.hpp"
#include "reflex/verify/scenario.hpp"

using namespace reflex;
using namespace reflex::verify;

namespace {

Report run(const std::string& text, Config config = {}) { return runScenarioText(text, "test", config); }

const char* kHypersurface = "ring R = quotient(x, y, z, w; grevlex; ideal(x*y))\n";

}  // namespace

TEST_CASE("parser reports line and column") {
  try {
    parseScenario("ring R = poly(x, y)\nassert dim(S) == 1\n", "t");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parseScenario("ring R = poly(x)\nring R = poly(y)\n", "t"), ParseError);
  CHECK_THROWS_AS(parseScenario("assert 1 =< 2\n", "t"), ParseError);
  CHECK_THROWS_AS(parseScenario("module M = cyclic((x)\n", "t"), ParseError);
  CHECK_THROWS_AS(parseScenario("field gf7\n", "t"), ParseError);
}

TEST_CASE("parser accepts the full statement set") {
  const char* text = R"dsl(field qq
ring R = quotient(x, y; lex; ideal(x*y)) {cohen_macaulay, gorenstein=true}
ideal p = (x,
           y)
module M = cokernel(matrix[[x, y]])
let n = 1 + 1
require "gate": n >= 2        # trivial
assert "named": dim(R) == 1   # paper
assert dim(R) != 2
note "out of scope"
)dsl";
  Scenario s = parseScenario(text, "t");
  CHECK(s.field == "qq");
  REQUIRE(s.statements.size() == 9);
  CHECK((s.statements[1].kind == Statement::Kind::Ring));
  CHECK((s.statements[5].kind == Statement::Kind::Require));
  CHECK(s.statements[6].provenance == "paper");
  CHECK(s.statements[7].provenance == "none");
  CHECK(isReservedName("inf"));
  CHECK_FALSE(isReservedName("M"));
}

TEST_CASE("empty scenario passes with no checks") {
  Report r = run("");
  CHECK(r.checks.empty());
  CHECK(r.verdict() == "pass");
  CHECK(r.exitCode() == 0);
}

TEST_CASE("pd of a free module is Finite(0)") {
  Report r = run("ring R = poly(x, y)\nmodule F = free(R, 2)\nassert pd(F) == 1  # trivial\n");
  REQUIRE(r.checks.size() == 1);
  CHECK((r.checks[0].status == Status::Fail));
  CHECK(r.checks[0].computed == "Finite(0)");
  CHECK(r.verdict() == "fail");
  CHECK(r.exitCode() == 1);
}

TEST_CASE("engine errors surface as error checks") {
  Report r = run("ring R = quotient(x, y, z; grevlex; ideal(x^2, x*y, y^2))\nmodule M = cyclic((x))\n"
                 "assert serre(M, 1) == true\n");
  REQUIRE(r.checks.size() == 1);
  CHECK((r.checks[0].status == Status::Error));
  CHECK(r.checks[0].computed.find("Gorenstein") != std::string::npos);
  CHECK(r.exitCode() == 2);
}

TEST_CASE("bound-limited Tor vanishing is advisory") {
  // Tor_1(Y, M) = 0 but Tor_2(Y, M) != 0, and neither module has finite pd.
  std::string text = std::string(kHypersurface) +
                     "module M = cyclic((x))\n"
                     "module Y = transpose(syzygy(transpose(transpose(cyclic((y, z, w)))), 2))\n"
                     "assert tor_independent(Y, M) == true\n";
  Config c;
  c.maxRes = 2;
  Report r = run(text, c);
  REQUIRE(r.checks.size() == 1);
  CHECK((r.checks[0].status == Status::Advisory));
  CHECK(r.verdict() == "pass");
  CHECK(toText(r).find("advisory") != std::string::npos);
  c.maxRes = 8;
  Report full = run(text, c);
  CHECK((full.checks[0].status == Status::Fail));
}

TEST_CASE("failed requirements skip the assertions") {
  std::string text = std::string(kHypersurface) +
                     "require \"h\": dim(R) == 4\nassert \"a\": dim(R) == 3\nassert \"b\": dim(R) == 3\n";
  Report r = run(text);
  REQUIRE(r.checks.size() == 3);
  CHECK((r.checks[0].status == Status::Fail));
  CHECK((r.checks[1].status == Status::Skipped));
  CHECK(r.checks[1].computed.find("'h'") != std::string::npos);
  CHECK(r.verdict() == "fail");
}

TEST_CASE("value comparisons") {
  std::string text = std::string(kHypersurface) +
                     "ideal p = (y, z, w)\n"
                     "module M = cyclic((x))\n"
                     "assert depth(cyclic((1))) == inf\n"
                     "assert depth(M) < inf\n"
                     "assert grade(p) >= 2\n"
                     "assert betti(residue(R), 2) == [1, 4, 7]\n"
                     "assert fitting(cyclic(p), 0) == p\n"
                     "assert ann(cyclic(p)) != 0\n"
                     "assert tensor(M, M) == M\n"
                     "assert hf(M, 2) == [1, 3, 6]\n";
  Report r = run(text);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.computed);
    CHECK((c.status == Status::Pass));
  }
}

TEST_CASE("JSON schema keys are exact") {
  Report r = runPaperExample("2.4", Config{});
  auto j = nlohmann::json::parse(toJson(r, false));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"checks", "config", "scenario", "verdict"});
  CHECK(j["config"].size() == 4);
  CHECK(j["config"]["maxDegree"].is_null());
  CHECK(j["config"]["maxRes"] == 8);
  const auto& c = j["checks"][0];
  for (const char* k : {"name", "kind", "expected", "computed", "status", "millis"}) CHECK(c.contains(k));
  CHECK(c.size() == 6);
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("reports do not depend on the number of jobs") {
  Config one, four;
  four.jobs = 4;
  for (const std::string id : {"2.4", "thm-2.3-generic", "cor-2.8"}) {
    CAPTURE(id);
    CHECK(toJson(runPaperExample(id, one), false) == toJson(runPaperExample(id, four), false));
  }
  CHECK(toJson(runPropertySuite("gb-oracle", 6, one), false) == toJson(runPropertySuite("gb-oracle", 6, four), false));
}

TEST_CASE("field both adds an agreement check") {
  Config c;
  c.field = "both";
  Report r = runPaperExample("vasconcelos", c);
  REQUIRE_FALSE(r.checks.empty());
  CHECK(r.checks.back().name == "field agreement");
  CHECK((r.checks.back().status == Status::Pass));
  CHECK(r.checks.front().name.rfind("[gf32003] ", 0) == 0);
}

TEST_CASE("unknown example ids and suites are rejected") {
  CHECK_THROWS_AS(runPaperExample("3.1", Config{}), InvalidArgument);
  CHECK_THROWS_AS(runPropertySuite("nope", 1, Config{}), InvalidArgument);
  CHECK_THROWS_AS(runPropertySuite("gb-oracle", 0, Config{}), InvalidArgument);
}

TEST_CASE("property trials are reproducible from the seed") {
  Config a, b;
  b.seed = 1;
  Report first = runPropertySuite("tor-symmetry", 4, a);
  Report again = runPropertySuite("tor-symmetry", 4, a);
  Report other = runPropertySuite("tor-symmetry", 4, b);
  CHECK(toJson(first, false) == toJson(again, false));
  CHECK(toJson(first, false) != toJson(other, false));
  CHECK(first.verdict() == "pass");
  CHECK(first.checks[0].computed.find("M = N = k") != std::string::npos);
}
