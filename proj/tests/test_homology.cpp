#include "doctest.h"
#include "support.hpp"

using namespace reflex;
using namespace reflex::test;

TEST_CASE_TEMPLATE("residue field over k[x,y]/(xy)", K, GF32003, Rational) {
  auto r = ring<K>({"x", "y"}, {"x*y"});
  auto res = resolve(residueField(r), 5);
  CHECK(res.bettiNumbers() == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
  CHECK(res.isComplex());
  CHECK(res.isMinimal());
  CHECK_FALSE(res.terminated);
  CHECK(res.pd() == PdResult::atLeast(5));
  // Linear resolution: beta_{i,i} only.
  for (int i = 0; i <= 5; ++i) CHECK(res.betti().entries.count({i, i}) == 1);
}

TEST_CASE_TEMPLATE("Koszul complex over a polynomial ring", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y", "z"});
  auto res = resolve(residueField(s));
  CHECK(res.terminated);
  CHECK(res.bettiNumbers() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(res.isComplex());
  CHECK(res.isMinimal());
  CHECK(pd(residueField(s)) == PdResult::finite(3));
  CHECK(res.betti().toString().find("total") != std::string::npos);
}

TEST_CASE_TEMPLATE("projective dimension", K, GF32003, Rational) {
  auto r = example24<K>();
  CHECK(pd(FPModule<K>::free(r, {0, 3})) == PdResult::finite(0));
  CHECK(pd(FPModule<K>::zero(r)) == PdResult::zeroModule());
  CHECK(PdResult::zeroModule().toString() == "-inf");
  CHECK(pd(transpose(cyclic(r, {"y", "z", "w"}))) == PdResult::finite(1));
  CHECK(pd(cyclic(r, {"x"}), 6) == PdResult::atLeast(6));
}

TEST_CASE_TEMPLATE("transpose of R/p", K, GF32003, Rational) {
  auto r = example24<K>();
  auto tr = transpose(cyclic(r, {"y", "z", "w"}));
  CHECK(tr.numGenerators() == 3);
  CHECK(tr.numRelations() == 1);
  CHECK(rank(tr) == 2);
}

TEST_CASE_TEMPLATE("depth", K, GF32003, Rational) {
  auto r = example24<K>();
  CHECK(depth(FPModule<K>::free(r, {0})) == Depth(3));
  CHECK(depth(cyclic(r, {"x"})) == Depth(3));
  CHECK(depth(cyclic(r, {"y", "z", "w"})) == Depth(1));
  CHECK_FALSE(depth(FPModule<K>::zero(r)).has_value());
  CHECK(depthToString(depth(FPModule<K>::zero(r))) == "inf");
  auto n = transpose(cyclic(r, {"y", "z", "w"}));
  CHECK(depth(n) == Depth(2));
  CHECK(depthAuslanderBuchsbaum(n) == depth(n));
  auto fat = ring<K>({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  CHECK(depth(residueField(fat)) == Depth(0));
  CHECK(grade(ideal(r, {"y", "z", "w"}), FPModule<K>::free(r, {0})) == Depth(2));
}

TEST_CASE_TEMPLATE("Tor and Ext", K, GF32003, Rational) {
  auto r = ring<K>({"x", "y"}, {"x*y"});
  auto k = residueField(r);
  auto kx = cyclic(r, {"x"});
  // Tor_i(R/(x), k) has dimension beta_i(R/(x)) = 1 in every degree i.
  for (int i = 1; i <= 3; ++i) {
    auto t = tor(kx, k, i);
    CHECK(hilbertFunction(t, i + 2).at(i) == 1);
  }
  CHECK(isZero(tor(kx, FPModule<K>::free(r, {0}), 1)));
  CHECK(isZero(ext(FPModule<K>::free(r, {0}), k, 1)));
  CHECK_FALSE(isZero(ext(kx, FPModule<K>::free(r, {0}), 0)));
  auto s = ring<K>({"x", "y"});
  auto ks = residueField(s);
  // Ext^2(k, S) = k(2) and the lower groups vanish.
  CHECK(isZero(ext(ks, FPModule<K>::free(s, {0}), 1)));
  auto top = ext(ks, FPModule<K>::free(s, {0}), 2);
  CHECK(mu(top) == 1);
  CHECK(top.generatorDegrees() == std::vector<int>{-2});
}

TEST_CASE_TEMPLATE("syzygy modules", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y", "z"});
  auto omega = syzygyModule(residueField(s), 1);
  CHECK(mu(omega) == 3);
  CHECK(pd(omega) == PdResult::finite(2));
  CHECK(isFree(syzygyModule(residueField(s), 3)));
  CHECK(isZero(syzygyModule(residueField(s), 4)));
}
