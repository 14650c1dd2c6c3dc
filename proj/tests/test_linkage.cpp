#include <doctest.h>

#include "linkage/linkage.hpp"
#include "test_support.hpp"

using namespace testing_support;

namespace {

struct FaultGuard {
  FaultGuard() { set_fault_skip_minimalize(true); }
  ~FaultGuard() { set_fault_skip_minimalize(false); }
};

}  // namespace

TEST_CASE("stability through Tr Tr") {
  auto s = ring("x,y");
  auto k = cyc(s, {"x", "y"});
  auto st = is_stable(k);
  CHECK(st.stable);
  CHECK(st.free_rank == 0);

  auto kr = direct_sum(k, free_module(s));
  st = is_stable(kr);
  CHECK_FALSE(st.stable);
  CHECK(st.free_rank == 1);
  CHECK(iso(stable_part(kr), k));

  CHECK(has_free_summand_by_trace(kr));
  CHECK_FALSE(has_free_summand_by_trace(k));
  CHECK(has_free_summand_by_trace(free_module(s, {0, 2})));
  CHECK(is_stable(free_module(s, {0, 1})).free_rank == 2);
}

TEST_CASE("first syzygy test") {
  auto s = ring("x,y");
  CHECK_FALSE(is_first_syzygy(cyc(s, {"x", "y"})));
  CHECK(is_first_syzygy(syzygy(cyc(s, {"x", "y"}), 1)));
  auto r = ring("x,y", {"xy"});
  CHECK(is_first_syzygy(cyc(r, {"x"})));
  CHECK_FALSE(is_first_syzygy(cyc(r, {"x", "y"})));
}

TEST_CASE("horizontal linkage") {
  auto r = ring("x,y", {"xy"});
  auto rep = is_horizontally_linked(cyc(r, {"x"}));
  CHECK(rep.stable);
  CHECK(rep.syzygy_test);
  CHECK(rep.verdict);
  CHECK(rep.double_link_iso.isomorphic());
  CHECK_FALSE(rep.fatal);

  auto s = ring("x,y");
  rep = is_horizontally_linked(cyc(s, {"x"}));
  CHECK_FALSE(rep.verdict);
  CHECK(rep.double_link_iso.kind == IsoVerdict::Kind::NotIsomorphic);
  CHECK_FALSE(rep.fatal);

  // k over a domain is stable but not a syzygy
  rep = is_horizontally_linked(cyc(s, {"x", "y"}));
  CHECK(rep.stable);
  CHECK_FALSE(rep.syzygy_test);
  CHECK_FALSE(rep.verdict);
  CHECK_FALSE(rep.fatal);
}

TEST_CASE("lambda pairs and self-linkage") {
  auto r = ring("x,y", {"xy"});
  auto rx = cyc(r, {"x"});
  auto ry = cyc(r, {"y"});
  CHECK(is_isomorphic_up_to_twist(link(rx), ry).isomorphic());
  CHECK(is_isomorphic_up_to_twist(link(ry), rx).isomorphic());
  CHECK(is_self_linked(rx).kind == IsoVerdict::Kind::NotIsomorphic);

  auto r2 = ring("x,y", {"x^2"});
  CHECK(is_self_linked(cyc(r2, {"x"})).isomorphic());
}

TEST_CASE("linkage by an ideal") {
  auto s = ring("x,y");
  auto v = linked_by_ideal(cyc(s, {"x"}), cyc(s, {"y"}), {P(s, "xy")});
  CHECK(v.verified);
  CHECK(v.m_to_lambda_n.isomorphic());
  CHECK(v.n_to_lambda_m.isomorphic());
  CHECK(v.quotient.ideal_gb().size() == 1);

  CHECK_THROWS_AS(linked_by_ideal(cyc(s, {"x"}), cyc(s, {"y"}), {P(s, "x")}), Inapplicable);

  auto w = linked_by_ideal(cyc(s, {"x"}), cyc(s, {"x"}), {P(s, "xy")});
  CHECK_FALSE(w.verified);
}

TEST_CASE("non-minimal presentations and the fault flag") {
  auto r = ring("x,y", {"xy"});
  auto rx = coker(r, {0, 0}, {{"x", "1"}, {"0", "-1"}});
  CHECK(rx.num_gens() == 2);
  CHECK(iso(rx, cyc(r, {"x"})));
  auto good = is_horizontally_linked(rx);
  CHECK(good.verdict);
  CHECK(good.free_rank_stripped == 0);
  CHECK_FALSE(good.fatal);

  FaultGuard guard;
  auto bad = is_horizontally_linked(rx);
  CHECK(bad.free_rank_stripped != 0);
  CHECK_FALSE(bad.verdict);
  CHECK(bad.double_link_iso.isomorphic());
  CHECK(bad.fatal);
}
