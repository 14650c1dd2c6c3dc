#include <doctest.h>

#include "linkage/dsl.hpp"
#include "test_support.hpp"

using namespace testing_support;
using namespace linkage::dsl;

namespace {

const char* kNode = R"(
ring S = poly(QQ, x, y);
ring R = quotient(S, [x*y]);
module M = coker(R, twists=[0], matrix=[[x]]);
)";

DslError parse_error(const std::string& src) {
  try {
    parse(src);
  } catch (const DslError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return DslError({}, "");
}

RunResult run(const std::string& src, const RunConfig& cfg = {}) { return execute(parse(src), cfg); }

}  // namespace

TEST_CASE("parse ring and module declarations") {
  Script s = parse("ring R = poly(QQ, x, y);");
  REQUIRE(s.statements.size() == 1);
  const auto& r = std::get<RingDecl>(s.statements[0]);
  CHECK(r.name == "R");
  CHECK(r.field == "QQ");
  CHECK(r.variables == std::vector<std::string>{"x", "y"});

  s = parse("ring R = poly(QQ, x, y);\nmodule M = coker(R, twists=[0], matrix=[[x]]);");
  REQUIRE(s.statements.size() == 2);
  const auto& m = std::get<ModuleDecl>(s.statements[1]);
  CHECK(m.ring == "R");
  CHECK(m.twists == std::vector<int>{0});
  REQUIRE(m.rows.size() == 1);
  CHECK(m.rows[0][0].text == "x");
}

TEST_CASE("inhomogeneous entry is rejected at its position") {
  DslError e = parse_error("ring R = poly(QQ, x); module M = coker(R, twists=[0], matrix=[[x + 1]]);");
  CHECK(e.pos().line == 1);
  CHECK(e.pos().col == 64);
  CHECK(e.message().find("x + 1") != std::string::npos);
  CHECK(e.message().find("homogeneous") != std::string::npos);
}

TEST_CASE("parse diagnostics") {
  SUBCASE("expected tokens") {
    DslError e = parse_error("ring R = poly(QQ, x)");
    CHECK(e.pos().line == 1);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "';'") != e.expected().end());
  }
  SUBCASE("undeclared name") {
    DslError e = parse_error("ring R = poly(QQ, x);\n\nlet L = lambda(N);");
    CHECK(e.pos().line == 3);
    CHECK(e.message().find("N") != std::string::npos);
  }
  SUBCASE("duplicate name") { parse_error("ring R = poly(QQ, x);\nring R = poly(QQ, y);"); }
  SUBCASE("unknown variable") { parse_error("ring R = poly(QQ, x);\nmodule M = coker(R, twists=[0], matrix=[[z]]);"); }
  SUBCASE("column degrees disagree") {
    parse_error("ring R = poly(QQ, x, y);\nmodule M = coker(R, twists=[0, 0], matrix=[[x], [y^2]]);");
  }
  SUBCASE("row count differs from twists") {
    parse_error("ring R = poly(QQ, x, y);\nmodule M = coker(R, twists=[0], matrix=[[x], [y]]);");
  }
  SUBCASE("non-prime field") { parse_error("ring R = poly(ZZ/6, x);"); }
  SUBCASE("unknown theorem") { parse_error(std::string(kNode) + "check NOPE(M=M);"); }
  SUBCASE("mixed rings") {
    parse_error(std::string(kNode) + "module N = coker(S, twists=[0], matrix=[[x]]);\nassert iso(M, N);");
  }
  SUBCASE("wrong argument kind") { parse_error(std::string(kNode) + "let L = syzygy(M, M);"); }
}

TEST_CASE("comments and blank lines are ignored") {
  Script a = parse("# header\nring R = poly(QQ, x);   # trailing\n\n");
  Script b = parse("ring R = poly(QQ, x);");
  CHECK(a == b);
}

TEST_CASE("parse(pretty_print(s)) == s") {
  const std::string src = std::string(kNode) + R"(
ring T = poly(ZZ/101, a, b, c);
module N = coker(S, twists=[0, 1], matrix=[[x^2, x*y], [-y, 2*x + 3*y]]);
let L = lambda(M);
let K = syzygy(twist(M, -2), 2);
let E = ext(M, R, 1);
let W = canonical(R);
assert is_horizontally_linked(M);
assert depth(M) >= 1;
assert rgr(M, W) != 0;
print betti(N, 3);
print hilbert(N);
check THM_MS(M=M);
check COR_COR6(M=M, a=[x + y]);
check THM_TH1(M=M, C=R, n=2);
suite [THM_MS G3_AB_FORMULA] on corpus(R, 10);
suite [] on corpus(S, 5);
)";
  Script s = parse(src);
  const std::string printed = pretty_print(s);
  CHECK(parse(printed) == s);
  CHECK(pretty_print(parse(printed)) == printed);
  CHECK(printed.find("module N = coker(S, twists=[0, 1], matrix=[[x^2, x*y], [-y, 2*x + 3*y]]);") !=
        std::string::npos);
}

TEST_CASE("linked cyclic module over the node exits 0") {
  RunResult r = run(std::string(kNode) + "assert is_horizontally_linked(M);");
  CHECK(r.failures == 0);
  CHECK(exit_code(r, false) == 0);
  CHECK(exit_code(r, true) == 0);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0]["value"] == true);
}

TEST_CASE("failed depth assertion exits 1 and reports the depth") {
  RunResult r = run(R"(
ring S = poly(QQ, x, y);
module k = coker(S, twists=[0], matrix=[[x, y]]);
assert depth(k) == 1;
)");
  CHECK(exit_code(r, false) == 1);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0]["value"] == false);
  CHECK(r.results[0]["detail"] == "depth = 0");
}

TEST_CASE("depth result schema") {
  RunResult r = run(std::string(kNode) + "print depth(M);");
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].dump() == R"j({"kind":"invariant","name":"depth(M)","value":1})j");
}

TEST_CASE("empty result serializes with the top-level keys in order") {
  RunResult r;
  r.config = config_to_json(RunConfig{});
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"version", "config", "declarations", "results"});
  CHECK(j["version"] == kVersion);
  CHECK(j["declarations"].empty());
  CHECK(j["results"].empty());
  CHECK(exit_code(r, true) == 0);
}

TEST_CASE("check reports list hypotheses in declaration order") {
  RunResult r = run(std::string(kNode) + "check THM_TH1(M=M, C=R, n=1);");
  REQUIRE(r.results.size() == 1);
  const auto& rep = r.results[0]["report"];
  CHECK(rep["id"] == "THM_TH1");
  const auto& hs = rep["hypothesis_status"];

  GradedRing node = ring("x,y", {"x*y"});
  Bindings b;
  b.m = cyc(node, {"x"});
  b.c = free_module(node);
  b.n = 1;
  TheoremReport direct = check(TheoremId::THM_TH1, b);
  REQUIRE(hs.size() == direct.hypotheses.size());
  REQUIRE(hs.size() >= 2);
  for (std::size_t i = 0; i < hs.size(); ++i) CHECK(hs[i]["hypothesis"] == direct.hypotheses[i].hypothesis);
  CHECK(rep["verdict"] == verdict_name(direct.verdict));
}

TEST_CASE("strict mode turns inapplicable checks into exit 4") {
  RunResult r = run("ring S = poly(QQ, x, y);\nmodule k = coker(S, twists=[0], matrix=[[x, y]]);\ncheck PROP_P3(M=k);");
  CHECK(r.inapplicable == 1);
  CHECK(exit_code(r, false) == 0);
  CHECK(exit_code(r, true) == 4);
}

TEST_CASE("budget exhaustion exits 3") {
  RunConfig cfg;
  cfg.max_degree = 1;
  RunResult r = run(R"(
ring S = poly(QQ, x, y, z);
module M = coker(S, twists=[0], matrix=[[x^2, y^2, z^2]]);
print betti(M, 3);
)",
                    cfg);
  CHECK(r.budget_hits == 1);
  CHECK(exit_code(r, false) == 3);
  CHECK(r.results[0].contains("error"));
}

TEST_CASE("fail-fast stops after the first failure") {
  const std::string src = R"(
ring S = poly(QQ, x, y);
module k = coker(S, twists=[0], matrix=[[x, y]]);
assert depth(k) == 1;
assert depth(k) == 2;
)";
  CHECK(run(src).results.size() == 2);
  RunConfig cfg;
  cfg.fail_fast = true;
  CHECK(run(src, cfg).results.size() == 1);
}

TEST_CASE("field override and printed values") {
  RunConfig cfg;
  cfg.field = "ZZ/7";
  RunResult r = run("ring S = poly(QQ, x, y);\nmodule k = coker(S, twists=[0], matrix=[[x, y]]);\nprint hilbert(k);\nprint dim(S);", cfg);
  CHECK(r.declarations[0]["value"]["field"] == "ZZ/7");
  CHECK(r.results[0]["value"] == "(1)");
  CHECK(r.results[1]["value"] == 2);
}

TEST_CASE("let binds modules that later statements use") {
  RunResult r = run(std::string(kNode) + "let L = lambda(M);\nlet LL = lambda(L);\nassert iso(M, LL);\nprint num_gens(L);");
  CHECK(r.failures == 0);
  CHECK(r.results[0]["value"] == true);
  CHECK(r.results[1]["value"] == 1);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::string src = std::string(kNode) + "check THM_MS(M=M);\nsuite [THM_MS REMARK3_I] on corpus(R, 6);\nprint betti(M, 2);";
  const std::string a = report_json(run(src));
  const std::string b = report_json(run(src));
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
}
