#include "doctest.h"
#include "reflex/verify/oracle.hpp"
#include "support.hpp"

using namespace reflex;
using namespace reflex::test;

TEST_CASE_TEMPLATE("reduced basis of a prime in the hypersurface", K, GF32003, Rational) {
  auto r = example24<K>();
  auto gb = idealGroebnerBasis(ideal(r, {"y + z", "z", "w"}));
  CHECK(gb.verify());
  // x*y is implied by y, so the reduced basis of the preimage is {y, z, w}.
  std::vector<std::string> seen;
  for (const auto& e : gb.elements()) seen.push_back(r->format(e));
  CHECK(seen.size() == 3);
  CHECK(gb.contains(r->parse("y")));
}

TEST_CASE_TEMPLATE("twisted cubic basis passes the Buchberger criterion", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y", "z", "w"});
  auto i = ideal(s, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  auto gb = idealGroebnerBasis(i);
  CHECK(gb.verify());
  CHECK(isMember(s->parse("x*z^2 - y^2*z"), i));
  CHECK_FALSE(isMember(s->parse("x*y"), i));
  CHECK(gb.certificate().find("S(") != std::string::npos);
}

TEST_CASE_TEMPLATE("membership agrees with the linear-algebra oracle", K, GF32003, Rational) {
  auto r = ring<K>({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  auto i = ideal(r, {"x + z", "y*z"});
  for (const char* f : {"x*z + z^2", "z^2", "y*z^2", "x*z", "z^3", "x + y + z"}) {
    auto p = r->parse(f);
    CAPTURE(f);
    CHECK(isMember(p, i) == verify::oracleMember(p, i));
  }
}

TEST_CASE_TEMPLATE("ideal operations", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y", "z"});
  auto a = ideal(s, {"x", "y"});
  auto b = ideal(s, {"y", "z"});
  auto meet = intersect(a, b);
  CHECK(isMember(s->parse("x*z"), meet));
  CHECK(isMember(s->parse("y"), meet));
  CHECK_FALSE(isMember(s->parse("x"), meet));
  auto c = colon(ideal(s, {"x*y", "x*z"}), ideal(s, {"x"}));
  CHECK(isSubset(c, b));
  CHECK(isSubset(b, c));
  CHECK(isSubset(idealProduct(a, b), meet));
  CHECK(isUnitIdeal(idealSum(a, ideal(s, {"z", "1"}))));
  CHECK(isZeroIdeal(Ideal<K>{s, {}}));
  CHECK(minimalize(ideal(s, {"x", "x*y", "y", "x + y"})).gens.size() == 2);
}

TEST_CASE("the zero ideal prints as (0)") {
  auto s = ring<GF32003>({"x"});
  CHECK(Ideal<GF32003>{s, {}}.toString() == "(0)");
}

TEST_CASE_TEMPLATE("module Groebner basis and syzygies", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y"});
  FreeModule<K> f{s, {0}};
  std::vector<Vec<K>> gens = {s->parse("x"), s->parse("y")};
  auto syz = syzygyMatrix(Matrix<K>::fromColumns(1, gens), f, {1, 1});
  REQUIRE(syz.cols() == 1);
  // The Koszul relation y*e1 - x*e2, up to sign.
  CHECK(s->format(s->add(s->mul(s->parse("x"), syz(0, 0)), s->mul(s->parse("y"), syz(1, 0)))) == "0");
  auto oracle = verify::oracleSyzygies(gens, {1, 1}, f, 2);
  CHECK(oracle.size() == 1);
}
