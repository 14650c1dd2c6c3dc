#include "doctest.h"
#include "linkage/groebner.hpp"
#include "linkage/hilbert.hpp"
#include "linkage/linalg.hpp"

using namespace linkage;

namespace {

const Field QQ = Field::rationals();

Poly var(int i) { return Poly::variable(i); }
Poly mono(std::vector<int> e, long c = 1) { return Poly::term(Monomial::from_exponents(e), Scalar(c)); }

FreeVector ideal_vec(const Poly& p) { return vector_from_polys(QQ, ModuleOrder::ring(), {p}); }

}  // namespace

TEST_CASE("field arithmetic") {
  Field f7 = Field::prime(7);
  CHECK(f7.mul(f7.from_int(3), f7.from_int(5)) == 1);
  CHECK(f7.inv(f7.from_int(3)) == 5);
  CHECK(f7.from_int(-1) == 6);
  CHECK_THROWS_AS(Field::prime(8), StructuralError);
  CHECK(QQ.div(Scalar(1), Scalar(3)) == Scalar(1, 3));
}

TEST_CASE("polynomial arithmetic") {
  Poly x = var(0), y = var(1);
  Poly p = mul(QQ, add(QQ, x, y), sub(QQ, x, y));
  CHECK(p == sub(QQ, mono({2, 0}), mono({0, 2})));
  CHECK(p.is_homogeneous());
  CHECK(p.to_string({"x", "y"}) == "x^2 - y^2");
  CHECK(add(QQ, x, Poly::constant(Scalar(1))).is_homogeneous() == false);
}

TEST_CASE("normal form") {
  Poly x = var(0), y = var(1);
  GroebnerBasis g = buchberger(QQ, {ideal_vec(x)}, ModuleOrder::ring());
  CHECK(normal_form(ideal_vec(mono({2, 0})), g).is_zero());
  CHECK(normal_form(ideal_vec(y), g) == ideal_vec(y));
  FreeVector v = normal_form(ideal_vec(add(QQ, x, y)), g);
  CHECK(normal_form(v, g) == v);
  GroebnerBasis g2 = buchberger(QQ, {ideal_vec(x), ideal_vec(y)}, ModuleOrder({0, 0}));
  CHECK_THROWS_AS(normal_form(vector_from_polys(QQ, ModuleOrder({0, 0}), {x, y}), g), StructuralError);
}

TEST_CASE("buchberger on two quadrics") {
  Poly a = sub(QQ, mono({2, 0}), mono({0, 2}));
  Poly b = add(QQ, mono({2, 0}), mono({0, 2}));
  GroebnerBasis g = buchberger(QQ, {ideal_vec(a), ideal_vec(b)}, ModuleOrder::ring());
  // by hand: a + b = 2x^2, b - a = 2y^2
  REQUIRE(g.size() == 2);
  CHECK(g.generators()[0] == ideal_vec(mono({0, 2})));
  CHECK(g.generators()[1] == ideal_vec(mono({2, 0})));
  CHECK(normal_form(ideal_vec(a), g).is_zero());
  CHECK(normal_form(ideal_vec(mono({2, 0})), g).is_zero());
  GroebnerBasis h = buchberger(QQ, {ideal_vec(b), ideal_vec(a)}, ModuleOrder::ring());
  CHECK(h.generators() == g.generators());
}

TEST_CASE("buchberger on a single module generator") {
  ModuleOrder ord({0, 0});
  FreeVector v = vector_from_polys(QQ, ord, {var(0), var(1)});
  GroebnerBasis g = buchberger(QQ, {v}, ord);
  REQUIRE(g.size() == 1);
  CHECK(g.generators()[0] == v);
}

TEST_CASE("syzygies") {
  Poly x = var(0), y = var(1);
  auto s = syzygy_basis(QQ, {ideal_vec(x), ideal_vec(y)}, {0});
  REQUIRE(s.size() == 1);
  auto comps = vector_to_polys(QQ, s[0], 2);
  // Koszul relation (y, -x) up to a unit
  Scalar c = comps[0].leading().coef;
  CHECK(comps[0] == scale(QQ, y, c));
  CHECK(comps[1] == scale(QQ, x, QQ.neg(c)));
  CHECK(syzygy_basis(QQ, {ideal_vec(Poly::constant(Scalar(1)))}, {0}).empty());
  auto r = syzygy_basis(QQ, {ideal_vec(x), ideal_vec(x)}, {0});
  REQUIRE(r.size() == 1);
  auto rc = vector_to_polys(QQ, r[0], 2);
  CHECK(rc[0].is_constant());
  CHECK(add(QQ, rc[0], rc[1]).is_zero());
}

TEST_CASE("syzygies compose to zero") {
  // three generic quadrics in QQ[x,y,z]
  Poly x = var(0), y = var(1), z = var(2);
  std::vector<Poly> f = {mul(QQ, x, y), mul(QQ, x, z), mul(QQ, y, z)};
  std::vector<FreeVector> gens;
  for (auto& p : f) gens.push_back(ideal_vec(p));
  auto s = syzygy_basis(QQ, gens, {0});
  CHECK(s.size() == 2);
  for (const auto& v : s) {
    auto c = vector_to_polys(QQ, v, 3);
    Poly total;
    for (int i = 0; i < 3; ++i) total = add(QQ, total, mul(QQ, c[i], f[i]));
    CHECK(total.is_zero());
  }
}

TEST_CASE("linear algebra") {
  DenseMatrix a(2, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 1) = 1;
  a.at(1, 2) = 1;
  CHECK(rank(QQ, a) == 2);
  DenseMatrix k = kernel(QQ, a);
  REQUIRE(k.cols() == 1);
  DenseMatrix prod = multiply(QQ, a, k);
  CHECK(Field::is_zero(prod.at(0, 0)));
  CHECK(Field::is_zero(prod.at(1, 0)));
}

TEST_CASE("monomial Hilbert numerators") {
  // S/(x^2) in two variables: (1 - t^2)/(1 - t)^2 = (1 + t)/(1 - t)
  HilbertSeries hs{monomial_ideal_numerator({Monomial::from_exponents({2, 0})}), 2};
  HilbertSeries expected{LaurentPoly::monomial(0) + LaurentPoly::monomial(1), 1};
  CHECK(hs == expected);
  CHECK(hs.reduced().numerator == expected.numerator);
  CHECK(hs.reduced().denominator_power == 1);
  // staircase count of S/(x^2): dim_k in degree d is 2 for d >= 1
  CHECK(hs.value(0) == 1);
  CHECK(hs.value(5) == 2);
  // residue field
  HilbertSeries k{monomial_ideal_numerator({Monomial::variable(0), Monomial::variable(1)}), 2};
  CHECK(k.reduced().numerator == LaurentPoly::monomial(0));
  CHECK(k.length() == 1);
  // (xy, xz, yz): HS = (1 + 2t)/(1 - t)
  HilbertSeries tri{monomial_ideal_numerator({Monomial::from_exponents({1, 1, 0}),
                                              Monomial::from_exponents({1, 0, 1}),
                                              Monomial::from_exponents({0, 1, 1})}),
                    3};
  CHECK(tri.dimension() == 1);
  CHECK(tri.value(4) == 3);
  HilbertSeries free2{LaurentPoly::monomial(0), 2};
  CHECK((hs + free2) - free2 == hs);
}
