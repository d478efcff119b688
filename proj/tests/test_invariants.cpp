#include "doctest.h"
#include "support.hpp"

using namespace reflex;
using namespace reflex::test;

TEST_CASE_TEMPLATE("height and support", K, GF32003, Rational) {
  auto r = example24<K>();
  auto p = ideal(r, {"y", "z", "w"});
  CHECK(height(p) == 2);
  CHECK(height(ideal(r, {"x", "y"})) == 1);
  CHECK(height(Ideal<K>{r, {}}) == 0);
  CHECK_THROWS_AS(height(Ideal<K>::unit(r)), DomainError);
  CHECK_FALSE(supportContains(cyclic(r, {"x"}), p));
  CHECK(supportContains(cyclic(r, {"y"}), p));
  CHECK(isTorsion(cyclic(r, {"y", "z", "w"})));
  CHECK_FALSE(isTorsion(cyclic(r, {"x"})));
  CHECK_FALSE(isTorsion(FPModule<K>::free(r, {0})));
}

TEST_CASE("height needs a Cohen-Macaulay equidimensional ring") {
  auto r = ring<GF32003>({"x", "y", "z"}, {"x*y", "x*z"});
  CHECK_FALSE(r->flags().cohenMacaulay);
  CHECK_THROWS_AS(height(ideal(r, {"x"})), UnsupportedRing);
}

TEST_CASE_TEMPLATE("Serre conditions in Example 2.4", K, GF32003, Rational) {
  auto r = example24<K>();
  auto m = cyclic(r, {"x"});
  auto n = transpose(cyclic(r, {"y", "z", "w"}));
  CHECK(serre(m, 2).holds);
  CHECK(serre(tensor(m, n), 2).holds);
  CHECK(serre(n, 1).holds);
  SerreReport s = serre(n, 2);
  CHECK_FALSE(s.holds);
  REQUIRE(s.certificate.size() == 2);
  CHECK(s.certificate[0].second);
  CHECK_FALSE(s.certificate[1].second);
  CHECK(s.toString().find("Ext^2") != std::string::npos);
}

TEST_CASE("serre refuses non-Gorenstein rings but torsionfreeness does not") {
  auto r = ring<GF32003>({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  auto m = cyclic(r, {"x"});
  CHECK_THROWS_AS(serre(m, 1), UnsupportedRing);
  CHECK_FALSE(torsionfreeness(m, 1).holds);
}

TEST_CASE_TEMPLATE("rank and local freeness", K, GF32003, Rational) {
  auto r = example24<K>();
  auto p = ideal(r, {"y", "z", "w"});
  auto rp = FPModule<K>::cyclic(p);
  CHECK(rank(transpose(rp)) == 2);
  CHECK(rank(FPModule<K>::free(r, {0, 0, 1})) == 3);
  CHECK_FALSE(localFreeness(rp, p).free);
  CHECK(localFreeness(rp, ideal(r, {"x", "z", "w"})).free);
  CHECK(localFreeness(FPModule<K>::free(r, {0}), p).free);
  CHECK(isLocallyFreeAt(transpose(rp), ideal(r, {"x", "z", "w"})));
}

TEST_CASE_TEMPLATE("depth formula in Example 2.4", K, GF32003, Rational) {
  auto r = example24<K>();
  auto m = cyclic(r, {"x"});
  auto n = transpose(cyclic(r, {"y", "z", "w"}));
  DepthFormulaReport d = checkDepthFormula(m, n);
  CHECK((d.certification == Certification::Certified));
  CHECK(d.torIndependent);
  CHECK(d.holds);
  CHECK(d.depthM == Depth(3));
  CHECK(d.depthN == Depth(2));
  CHECK(d.depthTensor == Depth(2));
  CHECK_FALSE(d.vacuous);
}

TEST_CASE_TEMPLATE("rigidity witness for Example 2.4", K, GF32003, Rational) {
  auto r = example24<K>();
  auto m = cyclic(r, {"x"});
  auto n = transpose(cyclic(r, {"y", "z", "w"}));
  auto w = rigidityWitness(m, n);
  REQUIRE(w.has_value());
  CHECK(w->valid());
  CHECK(w->n == 2);
  CHECK(isZero(tor(w->y, m, 1)));
  CHECK_FALSE(isZero(tor(w->y, m, 2)));
}
