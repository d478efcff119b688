#include "doctest.h"
#include "reflex/verify/oracle.hpp"
#include "support.hpp"

using namespace reflex;
using namespace reflex::test;

namespace {

template <class K>
Matrix<K> matrixOf(const RingPtr<K>& r, std::vector<std::vector<std::string>> rows) {
  Matrix<K> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = r->parse(rows[i][j]);
  return m;
}

template <class K>
void checkAgainstOracle(const FPModule<K>& m, int high) {
  HilbertFunction fast = hilbertFunction(m, high);
  HilbertFunction slow = verify::oracleHilbertFunction(m, fast.low, high);
  CHECK(fast == slow);
}

}  // namespace

TEST_CASE_TEMPLATE("Hilbert functions agree with the dense oracle", K, GF32003, Rational) {
  auto r = example24<K>();
  checkAgainstOracle(cyclic(r, {"x"}), 6);
  checkAgainstOracle(cyclic(r, {"y", "z", "w"}), 6);
  checkAgainstOracle(FPModule<K>::free(r, {0, 1, -1}), 5);
  auto fat = ring<K>({"x", "y", "z"}, {"x^2", "x*y", "y^2"});
  checkAgainstOracle(FPModule<K>::cokernel(fat, matrixOf(fat, {{"x", "z"}, {"y", "0"}})), 5);
}

TEST_CASE_TEMPLATE("Hilbert series of standard modules", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y", "z"});
  HilbertSeries hs = hilbertSeries(FPModule<K>::free(s, {0}));
  CHECK(hs.dimension() == 3);
  CHECK(hs.value(2) == 6);
  CHECK(hs.multiplicity() == 1);
  auto r = example24<K>();
  HilbertSeries hr = hilbertSeries(FPModule<K>::free(r, {0}));
  CHECK(hr.dimension() == 3);
  CHECK(hr.multiplicity() == 2);
  CHECK(dimension(FPModule<K>::zero(r)) == -1);
  CHECK(dimension(cyclic(r, {"y", "z", "w"})) == 1);
}

TEST_CASE_TEMPLATE("cokernel twist inference and minimal presentations", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y"});
  auto m = FPModule<K>::cokernel(s, matrixOf(s, {{"x", "y^2"}}));
  CHECK(m.generatorDegrees() == std::vector<int>{0});
  CHECK(m.relationDegrees() == std::vector<int>{1, 2});
  auto padded = FPModule<K>::cokernel(s, matrixOf(s, {{"1", "0"}, {"x", "y"}}));
  CHECK_FALSE(isMinimal(padded));
  auto small = minimalize(padded);
  CHECK(isMinimal(small));
  CHECK(mu(small) == 1);
  CHECK(hilbertFunction(small, 4) == hilbertFunction(padded, 4));
  CHECK_THROWS_AS(FPModule<K>::cokernel(s, matrixOf(s, {{"x", "y"}, {"x^2", "x"}})), InvalidArgument);
}

TEST_CASE_TEMPLATE("tensor, hom and dual", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y"});
  auto kx = cyclic(s, {"x"});
  auto ky = cyclic(s, {"y"});
  auto t = tensor(kx, ky);
  CHECK(hilbertFunction(t, 3) == hilbertFunction(cyclic(s, {"x", "y"}), 3));
  auto f = FPModule<K>::free(s, {0, 2});
  CHECK(hilbertFunction(hom(f, kx), 4) == hilbertFunction(directSum(kx, shift(kx, 2)), 4));
  CHECK(isZero(dual(cyclic(s, {"x", "y"}))));
  auto r = example24<K>();
  // Hom(R/(x), R) = ann(x) = (y), generated in degree 1.
  auto h = dual(cyclic(r, {"x"}));
  CHECK(h.generatorDegrees() == std::vector<int>{1});
  CHECK(hilbertFunction(h, 5) == hilbertFunction(shift(cyclic(r, {"x"}), -1), 5));
}

TEST_CASE_TEMPLATE("fitting ideals and annihilators", K, GF32003, Rational) {
  auto r = example24<K>();
  auto p = ideal(r, {"y", "z", "w"});
  auto rp = FPModule<K>::cyclic(p);
  auto f0 = fittingIdeal(rp, 0);
  CHECK(isSubset(f0, p));
  CHECK(isSubset(p, f0));
  CHECK(isUnitIdeal(fittingIdeal(rp, 1)));
  CHECK(isZeroIdeal(fittingIdeal(rp, -1)));
  auto ann = annihilator(rp);
  CHECK(isSubset(ann, p));
  CHECK(isSubset(p, ann));
  auto s = ring<K>({"x", "y"});
  auto minors = minorsIdeal(s, matrixOf(s, {{"x", "y", "0"}, {"0", "x", "y"}}), 2);
  CHECK(isSubset(minors, ideal(s, {"x^2", "x*y", "y^2"})));
  CHECK(isSubset(ideal(s, {"x^2", "x*y", "y^2"}), minors));
}

TEST_CASE_TEMPLATE("kernel, image and cokernel of a map", K, GF32003, Rational) {
  auto s = ring<K>({"x", "y"});
  auto src = FPModule<K>::free(s, {1, 1});
  auto tgt = FPModule<K>::free(s, {0});
  ModuleMap<K> f{src, tgt, matrixOf(s, {{"x", "y"}})};
  validate(f);
  auto k = kernel(f);
  CHECK(mu(k) == 1);
  CHECK(k.generatorDegrees() == std::vector<int>{2});
  auto im = hilbertFunction(image(f), 3);
  CHECK(im.at(0) == 0);
  CHECK(im.at(1) == 2);
  CHECK(im.at(3) == 4);
  CHECK(hilbertFunction(cokernel(f), 3) == hilbertFunction(cyclic(s, {"x", "y"}), 3));
  ModuleMap<K> bad{src, tgt, matrixOf(s, {{"x", "y^2"}})};
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
}

TEST_CASE_TEMPLATE("restriction of scalars", K, GF32003, Rational) {
  auto r = ring<K>({"x", "y"});
  auto s = ring<K>({"x", "y"}, {"y"});
  auto ks = FPModule<K>::cyclic(Ideal<K>{s, {}});
  auto back = restrictScalars(ks, r);
  CHECK(back.ring() == r);
  CHECK(hilbertFunction(back, 4) == hilbertFunction(cyclic(r, {"y"}), 4));
}
