#include <benchmark/benchmark.h>

#include "reflex/field.hpp"
#include "reflex/homology.hpp"
#include "reflex/invariants.hpp"
#include "reflex/verify/paper.hpp"
#include "reflex/verify/properties.hpp"

namespace {

using namespace reflex;

template <class K>
RingPtr<K> hypersurface() {
  return makeRing<K>({"x", "y", "z", "w"}, OrderKind::Grevlex, std::vector<std::string>{"x*y"});
}

template <class K>
void BM_TwistedCubicBasis(benchmark::State& state) {
  auto s = makePolynomialRing<K>({"x", "y", "z", "w"});
  auto i = Ideal<K>::parse(s, {"x*z - y^2", "y*w - z^2", "x*w - y*z"});
  for (auto _ : state) benchmark::DoNotOptimize(idealGroebnerBasis(i));
}
BENCHMARK_TEMPLATE(BM_TwistedCubicBasis, GF32003);
BENCHMARK_TEMPLATE(BM_TwistedCubicBasis, Rational);

template <class K>
void BM_ResidueFieldResolution(benchmark::State& state) {
  auto r = hypersurface<K>();
  auto k = residueField(r);
  int length = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(resolve(k, length));
}
BENCHMARK_TEMPLATE(BM_ResidueFieldResolution, GF32003)->Arg(4)->Arg(8);
BENCHMARK_TEMPLATE(BM_ResidueFieldResolution, Rational)->Arg(4)->Arg(8);

template <class K>
void BM_TransposeAndSerre(benchmark::State& state) {
  auto r = hypersurface<K>();
  auto n = transpose(FPModule<K>::cyclic(Ideal<K>::parse(r, {"y", "z", "w"})));
  for (auto _ : state) benchmark::DoNotOptimize(serre(n, 2));
}
BENCHMARK_TEMPLATE(BM_TransposeAndSerre, GF32003);
BENCHMARK_TEMPLATE(BM_TransposeAndSerre, Rational);

void BM_PaperExample(benchmark::State& state, const char* id) {
  verify::Config config;
  for (auto _ : state) benchmark::DoNotOptimize(verify::runPaperExample(id, config));
}
BENCHMARK_CAPTURE(BM_PaperExample, ex_2_4, "2.4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PaperExample, ex_2_5, "2.5")->Unit(benchmark::kMillisecond);

void BM_PropertySuite(benchmark::State& state, const char* suite) {
  verify::Config config;
  for (auto _ : state) benchmark::DoNotOptimize(verify::runPropertySuite(suite, 10, config));
}
BENCHMARK_CAPTURE(BM_PropertySuite, depth_formula, "depth-formula")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PropertySuite, tor_symmetry, "tor-symmetry")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
