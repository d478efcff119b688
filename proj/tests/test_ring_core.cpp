#include "doctest.h"
#include "support.hpp"

using namespace reflex;
using namespace reflex::test;

TEST_CASE("prime field arithmetic") {
  GF32003 a(32002), b(2);
  CHECK(a + b == GF32003(1));
  CHECK(a == GF32003(-1));
  CHECK((b * b.inverse()).isOne());
  CHECK(GF32003(0).isZero());
  CHECK_THROWS_AS(GF32003(0).inverse(), DomainError);
  CHECK(GF32003::fromDecimal("64007") == GF32003(1));
  CHECK(GF32003(-5).toString() == "-5");
}

TEST_CASE("rational arithmetic stays exact") {
  Rational third = Rational(1) / Rational(3);
  CHECK(third * Rational(3) == Rational(1));
  CHECK((third + third + third).isOne());
  CHECK(third.toString() == "1/3");
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  Rational big = Rational::fromDecimal("123456789012345678901234567890");
  CHECK(big.toString() == "123456789012345678901234567890");
}

TEST_CASE("monomial orders") {
  Monomial x2({2, 0, 0}), xy({1, 1, 0}), z3({0, 0, 3}), xz({1, 0, 1}), y2({0, 2, 0});
  CHECK(compareGrevlex(z3, x2) == std::strong_ordering::greater);
  CHECK(compareLex(x2, z3) == std::strong_ordering::greater);
  CHECK(compareGrevlex(x2, xy) == std::strong_ordering::greater);
  // Degree 2 in three variables: x^2 > xy > y^2 > xz under grevlex.
  CHECK(compareGrevlex(y2, xz) == std::strong_ordering::greater);
  CHECK(compareLex(xz, y2) == std::strong_ordering::greater);
  CHECK(lcm(x2, xy) == Monomial({2, 1, 0}));
  CHECK(gcd(x2, xy) == Monomial({1, 0, 0}));
  CHECK(x2.divides(Monomial({3, 1, 0})));
  CHECK_FALSE(xy.divides(x2));
  CHECK(coprime(x2, z3));
  CHECK((parseOrderKind("lex") == OrderKind::Lex));
  CHECK_THROWS_AS(parseOrderKind("deglex"), InvalidArgument);
}

TEST_CASE("more than sixteen variables is rejected") {
  std::vector<std::string> vars;
  for (int i = 0; i < 17; ++i) vars.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(ring<GF32003>(vars), InvalidArgument);
}

TEST_CASE_TEMPLATE("polynomial parsing and normal forms", K, GF32003, Rational) {
  auto r = example24<K>();
  auto f = r->parse("x^2*y + z");
  CHECK(r->format(f) == "z");
  auto g = r->parse("(x + y)^2");
  CHECK(r->format(g) == r->format(r->parse("x^2 + y^2")));
  CHECK(r->mul(r->parse("x"), r->parse("y")).isZero());
  CHECK(r->sub(g, g).isZero());
  CHECK_THROWS_AS(r->parse("x +"), ParseError);
  CHECK_THROWS_AS(r->parse("v"), ParseError);
  CHECK(r->describe() == "k[x,y,z,w]/(x*y)");
}

TEST_CASE_TEMPLATE("ring flags", K, GF32003, Rational) {
  auto hyper = example24<K>();
  CHECK(hyper->dimension() == 3);
  CHECK(hyper->flags().completeIntersection);
  CHECK(hyper->flags().gorenstein);
  CHECK(hyper->flags().cohenMacaulay);

  auto fat = ring<K>({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  CHECK(fat->dimension() == 1);
  CHECK(fat->flags().cohenMacaulay);
  CHECK_FALSE(fat->flags().gorenstein);
  CHECK_FALSE(fat->flags().completeIntersection);

  auto poly = ring<K>({"x", "y"});
  CHECK(poly->isPolynomialRing());
  CHECK(poly->dimension() == 2);
}

TEST_CASE("ring construction rejects bad ideals") {
  CHECK_THROWS_AS(ring<GF32003>({"x", "y"}, {"x^2 + y"}), InvalidArgument);
  CHECK_THROWS_AS(ring<GF32003>({"x", "y"}, {"1"}), InvalidArgument);
  DeclaredFlags wrong;
  wrong.gorenstein = true;
  CHECK_THROWS_AS(makeRing<GF32003>({"x", "y", "z"}, OrderKind::Grevlex, std::vector<std::string>{"x^2", "x*y", "y^2"}, wrong),
                  InvalidArgument);
}
