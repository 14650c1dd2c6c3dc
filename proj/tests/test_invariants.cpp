#include "doctest.h"
#include "linkage/invariants.hpp"
#include "test_support.hpp"

using namespace testing_support;

TEST_CASE("depth and dimension") {
  GradedRing s = ring("x,y,z");
  CHECK(depth(free_module(s)) == 3);
  CHECK(krull_dim(free_module(s)) == 3);
  ModulePresentation a = cyc(s, {"x", "y"});
  CHECK(depth(a) == 1);
  CHECK(krull_dim(a) == 1);
  ModulePresentation b = direct_sum(cyc(s, {"x"}), cyc(s, {"y", "z"}));
  CHECK(depth(b) == 1);
  CHECK(krull_dim(b) == 2);
  CHECK(local_cohomology_degrees(b) == std::vector<int>{1, 2});
  CHECK(cc(b) == 1);
  CHECK_THROWS_AS(cc(a), Inapplicable);
  CHECK(local_cohomology_degrees(free_module(s)) == std::vector<int>{3});
  CHECK(local_cohomology_degrees(cyc(ring("x,y"), {"x", "y"})) == std::vector<int>{0});
  CHECK(depth(ModulePresentation::zero(s)) == kInfiniteDepth);
  // dimension agrees with the Hilbert series
  for (const auto& m : {a, b, cyc(s, {"x^2", "xy"}), cyc(s, {"xy", "xz", "yz"})})
    CHECK(krull_dim(m) == m.hilbert_series().dimension());
}

TEST_CASE("grade and reduced grade") {
  GradedRing r = ring("x,y", {"xy"});
  CHECK(*grade_module(free_module(r)).value == 0);
  CHECK(*grade_module(cyc(r, {"x"})).value == 0);
  GradedRing s3 = ring("x,y,z");
  CHECK(*grade_module(cyc(s3, {"x", "y"})).value == 2);

  CHECK(reduced_grade(free_module(r), free_module(r), 6).to_string() == "inf");
  ReducedGrade rx = reduced_grade(cyc(r, {"x"}), free_module(r), 4);
  CHECK_FALSE(rx.value.has_value());
  CHECK(rx.to_string() == "InfinityUpTo(4)");
  GradedRing s = ring("x,y");
  CHECK(*reduced_grade(cyc(s, {"x", "y"}), free_module(s), 4).value == 2);

  // non-CM ring: bounded search agrees with the first nonvanishing Ext
  GradedRing u = ring("x,y,z,w", {"xz", "xw", "yz", "yw"});
  GradeResult g = grade_module(cyc(u, {"x", "y"}));
  CHECK_FALSE(u.invariants().cohen_macaulay);
  REQUIRE(g.value.has_value());
  CHECK(*g.value == 0);
}

TEST_CASE("probe primes and local depth") {
  GradedRing s = ring("x,y");
  auto probes = default_probe_primes(s);
  CHECK(probes.size() == 4);
  ProbePrime px = probes[1];
  CHECK(px.label == "(x)");
  CHECK(depth_at_prime(free_module(s), px) == 1);
  CHECK(depth_at_prime(cyc(s, {"x"}), px) == 0);
  ProbePrime py = probes[2];
  CHECK(py.label == "(y)");
  CHECK(depth_at_prime(cyc(s, {"x"}), py) == kInfiniteDepth);
  GradedRing r = ring("x,y", {"xy"});
  // only primes containing xy
  CHECK(default_probe_primes(r).size() == 3);
  ProbePrime up = user_probe_prime(s, {P(s, "x+y")}, "(x+y)");
  CHECK(up.height == 1);
  CHECK(prime_contains(s, up, P(s, "x^2 - y^2")));
  CHECK_FALSE(prime_contains(s, up, P(s, "x")));
  CHECK(depth_at_prime(cyc(s, {"x^2 - y^2"}), up) == 0);
}

TEST_CASE("Serre conditions") {
  GradedRing s = ring("x,y,z");
  for (int k = 1; k <= 4; ++k) CHECK(serre_tilde(free_module(s), k).holds());
  BoundedVerdict v = serre_tilde(cyc(s, {"x"}), 1);
  CHECK(v.failed());
  CHECK(v.witness == 1);
  GradedRing s2 = ring("x,y");
  ModulePresentation m = syzygy(cyc(s2, {"x", "y"}), 1);
  CHECK(serre_tilde(m, 1).kind == BoundedVerdict::Kind::True);
  CHECK(serre_tilde(m, 2).failed());
  // monotone in k
  GradedRing t = ring("x,y,z", {"xy", "xz", "yz"});
  for (const auto& mm : {cyc(t, {"x"}), cyc(t, {"x", "y"}), syzygy(cyc(t, {"x", "y", "z"}), 1)})
    for (int k = 2; k <= 3; ++k)
      if (serre_tilde(mm, k).holds()) CHECK(serre_tilde(mm, k - 1).holds());
  // non-CM ring: probes only
  GradedRing u = ring("x,y,z,w", {"xz", "xw", "yz", "yw"});
  BoundedVerdict fr = serre_tilde(free_module(u), 2);
  CHECK(fr.kind == BoundedVerdict::Kind::TrueOnProbes);
  CHECK(serre_tilde(cyc(u, {"x", "y", "z", "w"}), 1).failed());
}

TEST_CASE("semidualizing modules and canonical modules") {
  GradedRing s = ring("x,y");
  SemidualizingCertificate cr = is_semidualizing(free_module(s), 4);
  CHECK(cr.valid());
  CHECK_FALSE(is_semidualizing(cyc(s, {"x", "y"}), 3).valid());
  CHECK(iso(canonical_module(s), free_module(s, {2})));

  GradedRing h = ring("x,y", {"xy"});
  CHECK(is_isomorphic_up_to_twist(canonical_module(h), free_module(h)).isomorphic());

  GradedRing t = ring("x,y,z", {"xy", "xz", "yz"});
  ModulePresentation w = canonical_module(t);
  CHECK(minimalize(w).num_gens() == 2);
  CHECK(w.ring() == t);
  // F_9 of omega has rank 768
  CHECK_THROWS_AS(is_semidualizing(w, 8), BudgetExceeded);
  RankBudget budget(2048);
  SemidualizingCertificate cw = is_semidualizing(w, 8);
  CHECK(cw.homothety_bijective);
  CHECK(cw.valid());
  CHECK(cw.homothety_witness.isomorphic());
}

TEST_CASE("Auslander class") {
  GradedRing h = ring("x,y", {"xy"});
  ModulePresentation r = free_module(h);
  CHECK(in_auslander_class(cyc(h, {"x"}), r, 4).holds());
  CHECK(in_auslander_class(cyc(h, {"x", "y"}), r, 4).holds());
  GradedRing t = ring("x,y,z", {"xy", "xz", "yz"});
  ModulePresentation w = canonical_module(t);
  CHECK(auslander_map(free_module(t), w).isomorphism);
  CHECK(in_auslander_class(free_module(t), w, 4).holds());
  BoundedVerdict k = in_auslander_class(cyc(t, {"x", "y", "z"}), w, 4);
  CHECK(k.failed());
  CHECK(k.witness <= 4);
  CHECK_THROWS_AS(in_auslander_class(free_module(t), cyc(t, {"x", "y", "z"}), 2), Inapplicable);
}

TEST_CASE("G_C-dimension") {
  GradedRing h = ring("x,y", {"xy"});
  CHECK(gc_dim(free_module(h), free_module(h), 4).kind == GcDimVerdict::Kind::Zero);
  GcDimVerdict rx = gc_dim(cyc(h, {"x"}), free_module(h), 6);
  CHECK(rx.kind == GcDimVerdict::Kind::Zero);
  GradedRing s = ring("x,y");
  GcDimVerdict k = gc_dim(cyc(s, {"x", "y"}), free_module(s), 6);
  CHECK(k.kind == GcDimVerdict::Kind::Finite);
  CHECK(k.value == 2);
  // over a non-Gorenstein ring the residue field has infinite G-dimension
  GradedRing t = ring("x,y,z", {"xy", "xz", "yz"});
  CHECK(gc_dim(cyc(t, {"x", "y", "z"}), free_module(t), 4).kind == GcDimVerdict::Kind::Infinite);
  // but G_omega-dimension zero for maximal Cohen-Macaulay modules
  ModulePresentation w = canonical_module(t);
  CHECK(gc_dim(cyc(t, {"x"}), w, 4).kind == GcDimVerdict::Kind::Zero);
}

TEST_CASE("perfect and Gorenstein ideals") {
  GradedRing s = ring("x,y");
  ModulePresentation c = free_module(s);
  CHECK(is_gc_gorenstein(s, {P(s, "x")}, c).holds());
  CHECK(is_gc_perfect(s, {P(s, "x"), P(s, "y")}, c).holds());
  CHECK(is_gc_gorenstein(s, {P(s, "x"), P(s, "y")}, c).holds());
  CHECK_FALSE(is_gc_perfect(s, {P(s, "x^2"), P(s, "xy")}, c).holds());
  GradedRing s3 = ring("x,y,z");
  BoundedVerdict tri = is_gc_gorenstein(s3, {P(s3, "xy"), P(s3, "xz"), P(s3, "yz")}, free_module(s3));
  CHECK(tri.failed());
  CHECK(is_gc_perfect(s3, {P(s3, "xy"), P(s3, "xz"), P(s3, "yz")}, free_module(s3)).holds());

  auto [k, cert] = induced_semidualizing(s, {P(s, "x")}, c);
  CHECK(cert.valid());
  CHECK(minimalize(k).num_gens() == 1);
  auto [k2, cert2] = induced_semidualizing(s, {P(s, "xy")}, c);
  CHECK(cert2.valid());
  CHECK(is_isomorphic_up_to_twist(k2, free_module(k2.ring())).isomorphic());
}

TEST_CASE("finite length, socles and local cohomology shapes") {
  GradedRing s = ring("x,y");
  auto fl = is_finite_length(cyc(s, {"x", "y"}));
  CHECK(fl.first);
  CHECK(*fl.second == 1);
  CHECK_FALSE(is_finite_length(cyc(s, {"x"})).first);
  CHECK(m_in_ass(cyc(s, {"x^2", "xy"})));
  CHECK_FALSE(m_in_ass(cyc(s, {"x"})));
  // m in Ass iff depth 0
  for (const auto& m : {cyc(s, {"x^2", "xy"}), cyc(s, {"x"}), cyc(s, {"x", "y^2"}), free_module(s)})
    CHECK(m_in_ass(m) == (depth(m) == 0));

  GradedRing s3 = ring("x,y,z");
  CHECK(is_eilenberg_maclane(cyc(s3, {"x"})));
  ModulePresentation three = direct_sum(direct_sum(cyc(s3, {"x"}), cyc(s3, {"y", "z"})), cyc(s3, {"x", "y", "z"}));
  CHECK(local_cohomology_degrees(three) == std::vector<int>{0, 1, 2});
  CHECK_FALSE(is_eilenberg_maclane(three));
  CHECK(is_generalized_cm(direct_sum(cyc(s, {"x"}), cyc(s, {"x", "y"}))));
  CHECK_FALSE(is_generalized_cm(direct_sum(cyc(s3, {"x"}), cyc(s3, {"y", "z"}))));
}

TEST_CASE("reduced G_C-perfection and torsionfree degree") {
  GradedRing s = ring("x,y");
  ModulePresentation c = free_module(s);
  CHECK(is_reduced_gc_perfect(cyc(s, {"x", "y"}), c, 6).holds());
  CHECK(is_reduced_gc_perfect(cyc(s, {"x"}), c, 6).holds());
  CHECK(is_reduced_gc_perfect(free_module(s), c, 6).failed());
  // k is 0-torsionfree only, m is a first syzygy, S is a syzygy of every order
  CHECK(n_torsionfree_degree(cyc(s, {"x", "y"}), 4) == 0);
  CHECK(n_torsionfree_degree(syzygy(cyc(s, {"x", "y"}), 1), 4) == 1);
  CHECK(n_torsionfree_degree(free_module(s), 4) == 4);
}
