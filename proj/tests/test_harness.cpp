#include <doctest.h>

#include "linkage/harness.hpp"
#include "test_support.hpp"

using namespace testing_support;

namespace {

Bindings bind(const ModulePresentation& m, std::optional<ModulePresentation> c = std::nullopt) {
  Bindings b;
  b.m = m;
  b.c = std::move(c);
  return b;
}

bool has_label(const std::vector<CorpusEntry>& es, const std::string& label) {
  for (const auto& e : es)
    if (e.label == label) return true;
  return false;
}

}  // namespace

TEST_CASE("theorem ids round-trip through names") {
  CHECK(all_theorem_ids().size() == 27);
  for (TheoremId id : all_theorem_ids()) CHECK(theorem_from_name(theorem_name(id)) == id);
  CHECK_FALSE(theorem_from_name("NOPE").has_value());
}

TEST_CASE("THM_MS on a linked cyclic module and on a free module") {
  auto r = ring("x,y", {"x*y"});
  auto rep = check(TheoremId::THM_MS, bind(cyc(r, {"x"})));
  CHECK(rep.verdict == Verdict::Verified);
  REQUIRE(rep.claims.size() == 1);
  CHECK(rep.claims[0].detail.find("= true") != std::string::npos);

  auto free_rep = check(TheoremId::THM_MS, bind(free_module(r)));
  CHECK(free_rep.verdict == Verdict::Verified);
  CHECK(free_rep.claims[0].detail.find("= true") == std::string::npos);
}

TEST_CASE("G3_AB_FORMULA on the Koszul example") {
  auto s = ring("x,y");
  auto rep = check(TheoremId::G3_AB_FORMULA, bind(cyc(s, {"x", "y"}), free_module(s)));
  CHECK(rep.verdict == Verdict::Verified);
  CHECK(rep.all_hypotheses_exact());
}

TEST_CASE("COR_COR5 on R/(x) over the node") {
  auto r = ring("x,y", {"x*y"});
  auto rep = check(TheoremId::COR_COR5, bind(cyc(r, {"x"})));
  CHECK(rep.verdict == Verdict::Verified);
}

TEST_CASE("hypothesis failure makes a check inapplicable") {
  auto s = ring("x,y");
  // k over a regular ring is not horizontally linked
  auto rep = check(TheoremId::PROP_P3, bind(cyc(s, {"x", "y"})));
  CHECK(rep.verdict == Verdict::Inapplicable);
  CHECK_FALSE(rep.note.empty());
}

TEST_CASE("missing bindings throw") {
  Bindings b;
  CHECK_THROWS_AS(check(TheoremId::THM_MS, b), StructuralError);
  auto r = ring("x,y", {"x*y"});
  CHECK_THROWS_AS(check(TheoremId::COR_COR6, bind(cyc(r, {"x"}))), StructuralError);
}

TEST_CASE("THM_TH4 on reduced perfect modules") {
  auto s = ring("x,y");
  auto rep = check(TheoremId::THM_TH4, bind(cyc(s, {"x", "y"})));
  CHECK(rep.verdict == Verdict::Verified);
  auto rep2 = check(TheoremId::THM_TH4, bind(cyc(s, {"x"})));
  CHECK(rep2.verdict == Verdict::Verified);
}

TEST_CASE("REMARK3_I with C = R") {
  auto r = ring("x,y", {"x*y"});
  CHECK(check(TheoremId::REMARK3_I, bind(cyc(r, {"x"}))).verdict == Verdict::Verified);
}

TEST_CASE("run_suite summaries") {
  auto empty = run_suite({}, all_theorem_ids());
  CHECK(empty.reports.empty());
  CHECK(empty.summary.verified + empty.summary.refuted + empty.summary.inapplicable + empty.summary.partial == 0);

  auto r = ring("x,y");
  auto one = run_suite({bind(free_module(r))}, {TheoremId::THM_MS});
  REQUIRE(one.reports.size() == 1);
  CHECK(one.summary.verified == 1);
  CHECK(one.summary.passed());

  Bindings missing;
  missing.ring = r;
  auto miss = run_suite({missing}, {TheoremId::THM_MS});
  CHECK(miss.summary.inapplicable == 1);
}

TEST_CASE("negative control refutes THM_MS") {
  auto r = ring("x,y", {"x*y"});
  auto m = coker(r, {0, 0}, {{"x", "1"}, {"0", "-1"}});
  CHECK(check(TheoremId::THM_MS, bind(m)).verdict == Verdict::Verified);
  clear_harness_memo();
  set_fault_skip_minimalize(true);
  auto rep = check(TheoremId::THM_MS, bind(m));
  set_fault_skip_minimalize(false);
  clear_harness_memo();
  CHECK(rep.verdict == Verdict::Refuted);
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("corpus contents") {
  auto s = ring("x,y");
  auto cs = generate_corpus(s);
  CHECK(has_label(cs, "k"));
  CHECK(has_label(cs, "R/(x)"));
  CHECK(has_label(cs, "Omega k"));
  // (x,y) appears as the first syzygy of k
  bool ideal_found = false;
  for (const auto& e : cs)
    if (e.label == "Omega k") ideal_found = iso(e.module, syzygy(cyc(s, {"x", "y"}), 1));
  CHECK(ideal_found);

  auto r = ring("x,y", {"x*y"});
  auto cr = generate_corpus(r);
  CHECK(has_label(cr, "R/(x)"));
  CHECK(has_label(cr, "R/(y)"));
  CHECK(has_label(cr, "R/(x,y)"));
  for (const auto& e : cr) {
    auto mm = minimalize(e.module);
    CHECK_NOTHROW(ModulePresentation(mm.ring(), mm.gen_twists(), mm.rel_twists(), mm.matrix()));
    CHECK(minimalize(mm).num_gens() == mm.num_gens());
  }

  CHECK(generate_corpus(r, 5).size() == 5);
  auto again = generate_corpus(r);
  REQUIRE(again.size() == cr.size());
  for (std::size_t i = 0; i < cr.size(); ++i) CHECK(again[i].module.to_string() == cr[i].module.to_string());
}

TEST_CASE("builtin corpus spans three rings with at least fifty modules") {
  auto rings = builtin_rings();
  CHECK(rings.size() == 3);
  std::size_t plain = 0;
  for (const auto& b : builtin_corpus(false)) plain += b.m.has_value();
  CHECK(plain >= 50);
}

TEST_CASE("Gorenstein and canonical detection") {
  CHECK(is_gorenstein(ring("x,y", {"x*y"})));
  auto t = ring("x,y,z", {"x*y", "x*z", "y*z"});
  CHECK_FALSE(is_gorenstein(t));
  CHECK(is_canonical_module(canonical_module(t)));
  CHECK_FALSE(is_canonical_module(free_module(t)));
}
