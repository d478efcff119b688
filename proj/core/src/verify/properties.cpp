#include "reflex/verify/properties.hpp"

#include <chrono>
#include <random>

#include "reflex/errors.hpp"
#include "reflex/field.hpp"
#include "reflex/verify/evaluator.hpp"
#include "reflex/verify/oracle.hpp"

namespace reflex::verify {

template <class K>
FourTermResult fourTermDefect(const FPModule<K>& m, const FPModule<K>& n, int bound,
                              std::optional<int> maxDegree) {
  FPModule<K> trN = transpose(n);
  std::vector<FPModule<K>> parts = {ext(trN, m, 1, bound), tensor(m, n), hom(dual(n), m), ext(trN, m, 2, bound)};
  FourTermResult r;
  bool first = true;
  for (const auto& p : parts) {
    if (isZero(p)) continue;
    for (int d : p.generatorDegrees()) {
      r.low = first ? d : std::min(r.low, d);
      first = false;
    }
    r.high = std::max(r.high, defaultDegreeBound(p));
  }
  if (maxDegree) r.high = *maxDegree;
  std::vector<HilbertFunction> hfs;
  for (const auto& p : parts) hfs.push_back(isZero(p) ? HilbertFunction{} : hilbertFunction(p, r.high));
  for (int d = r.low; d <= r.high; ++d) {
    long long s = 0;
    for (std::size_t k = 0; k < hfs.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * hfs[k].at(d);
    r.defect = std::max(r.defect, s < 0 ? -s : s);
  }
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxAttempts = 60;

struct NamedRing {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
};

// k[x,y]/(xy), k[x,y,z,w]/(xy), k[x,y,z]/(x^2,xy,y^2) and two regular rings.
const std::vector<NamedRing>& ringMenu() {
  static const std::vector<NamedRing> menu = {
      {"k[x,y]/(xy)", {"x", "y"}, {"x*y"}},
      {"k[x,y,z,w]/(xy)", {"x", "y", "z", "w"}, {"x*y"}},
      {"k[x,y,z]/(x^2,xy,y^2)", {"x", "y", "z"}, {"x^2", "x*y", "y^2"}},
      {"k[x,y,z]", {"x", "y", "z"}, {}},
      {"k[x,y]", {"x", "y"}, {}},
  };
  return menu;
}

template <class K>
std::vector<RingPtr<K>> buildRings() {
  std::vector<RingPtr<K>> out;
  for (const auto& r : ringMenu()) out.push_back(makeRing<K>(r.vars, OrderKind::Grevlex, r.ideal));
  return out;
}

std::uint64_t suiteCode(const std::string& suite) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h;
}

class Rng {
public:
  Rng(std::uint64_t seed, const std::string& suite, int trial, int attempt) {
    std::uint64_t code = suiteCode(suite);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(code >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt)};
    gen_.seed(seq);
  }
  /// Uniform-enough integer in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }

private:
  std::mt19937_64 gen_;
};

// Homogeneous polynomial of degree d with one to three terms and small
// nonzero coefficients, reduced in the ring (it may vanish).
template <class K>
Polynomial<K> randomPoly(Rng& rng, const RingPtr<K>& ring, int d) {
  auto monos = monomialsOfDegree(ring->nvars(), d);
  int terms = rng.between(1, 3);
  std::vector<Term<K>> ts;
  for (int t = 0; t < terms; ++t) {
    int c = rng.between(1, 3) * (rng.below(2) ? 1 : -1);
    ts.push_back({K(c), monos[rng.below(monos.size())], 0});
  }
  return ring->reduce(vec::canonicalize(std::move(ts), ring->polyOrder()));
}

// coker of a random rows x cols matrix; generators in degree 0, column j of
// degree 1 or 2. Each entry is zero with probability 1/4.
template <class K>
FPModule<K> randomCokernel(Rng& rng, const RingPtr<K>& ring, int rows, int cols) {
  std::vector<int> colDeg;
  for (int j = 0; j < cols; ++j) colDeg.push_back(rng.between(1, 2));
  Matrix<K> a(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng.below(4) != 0) a(i, j) = randomPoly(rng, ring, colDeg[j]);
  return FPModule<K>(ring, std::vector<int>(static_cast<std::size_t>(rows), 0), colDeg, std::move(a));
}

template <class K>
bool injective(const FPModule<K>& m) {
  if (m.numRelations() == 0) return true;
  return syzygyMatrix(m.presentation(), m.target(), m.relationDegrees()).cols() == 0;
}

// N = coker of an injective matrix (pd N <= 1), or nullopt if the draw is
// not injective or the module is zero.
template <class K>
std::optional<FPModule<K>> randomPdOne(Rng& rng, const RingPtr<K>& ring) {
  int rows = rng.between(1, 2);
  int cols = rng.between(1, rows);
  FPModule<K> n = randomCokernel(rng, ring, rows, cols);
  if (!injective(n) || isZero(n)) return std::nullopt;
  return n;
}

// First syzygy of a random cokernel: a torsionless module.
template <class K>
std::optional<FPModule<K>> randomTorsionless(Rng& rng, const RingPtr<K>& ring) {
  FPModule<K> c = randomCokernel(rng, ring, rng.between(1, 2), rng.between(1, 3));
  FPModule<K> m = syzygyModule(c, 1);
  if (isZero(m)) return std::nullopt;
  return m;
}

template <class K>
std::string ringName(const std::vector<RingPtr<K>>& rings, const RingPtr<K>& r) {
  for (std::size_t i = 0; i < rings.size(); ++i)
    if (rings[i] == r) return ringMenu()[i].name;
  return r->describe();
}

template <class K>
class Suites {
public:
  Suites(const Config& config, std::string suite)
      : config_(config), suite_(std::move(suite)), rings_(buildRings<K>()) {}

  CheckRecord trial(int t) const {
    CheckRecord rec;
    rec.name = "trial " + std::to_string(t);
    rec.kind = suite_;
    auto start = Clock::now();
    try {
      if (suite_ == "depth-formula") depthFormula(t, rec);
      else if (suite_ == "obs-2.6") observation(t, rec);
      else if (suite_ == "tor-symmetry") torSymmetry(t, rec);
      else if (suite_ == "ab-four-term") fourTerm(t, rec);
      else gbOracle(t, rec);
    } catch (const std::exception& e) {
      rec.computed = std::string("error: ") + e.what();
      rec.status = Status::Error;
    }
    rec.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rec;
  }

private:
  int bound() const { return config_.maxRes; }

  const RingPtr<K>& pickRing(Rng& rng) const { return rings_[rng.below(rings_.size())]; }

  static void noInstance(CheckRecord& rec) {
    rec.computed = "no qualifying instance in " + std::to_string(kMaxAttempts) + " draws";
    rec.status = Status::Fail;
  }

  void depthFormula(int t, CheckRecord& rec) const {
    rec.expected = "depth M + depth N = depth R + depth M(x)N";
    for (int a = 0; a < kMaxAttempts; ++a) {
      Rng rng(config_.seed, suite_, t, a);
      const RingPtr<K>& ring = pickRing(rng);
      std::optional<FPModule<K>> m, n;
      if (rng.below(2) == 0) {
        m = randomTorsionless(rng, ring);
        n = randomPdOne(rng, ring);
      } else {
        m = randomCokernel(rng, ring, rng.between(1, 2), rng.between(1, 2));
        n = randomCokernel(rng, ring, rng.between(1, 2), rng.between(1, 2));
      }
      if (!m || !n || isZero(*m) || isZero(*n)) continue;
      DepthFormulaReport rep = checkDepthFormula(*m, *n, bound());
      if (rep.certification != Certification::Certified || !rep.torIndependent || rep.vacuous) continue;
      rec.computed = depthToString(rep.depthM) + " + " + depthToString(rep.depthN) + " vs " +
                     depthToString(rep.depthR) + " + " + depthToString(rep.depthTensor) + " over " +
                     ringName(rings_, ring) + " (draw " + std::to_string(a) + ")";
      rec.status = rep.holds ? Status::Pass : Status::Fail;
      return;
    }
    noInstance(rec);
  }

  void observation(int t, CheckRecord& rec) const {
    rec.expected = "Tor_1(M, N) = 0";
    for (int a = 0; a < kMaxAttempts; ++a) {
      Rng rng(config_.seed, suite_, t, a);
      const RingPtr<K>& ring = pickRing(rng);
      auto n = randomPdOne(rng, ring);
      auto m = randomTorsionless(rng, ring);
      if (!m || !n) continue;
      bool zero = isZero(tor(*n, *m, 1, bound()));
      rec.computed = std::string(zero ? "Tor_1(M, N) = 0" : "Tor_1(M, N) != 0") + " over " +
                     ringName(rings_, ring) + " (draw " + std::to_string(a) + ")";
      rec.status = zero ? Status::Pass : Status::Fail;
      return;
    }
    noInstance(rec);
  }

  void torSymmetry(int t, CheckRecord& rec) const {
    rec.expected = "HF Tor_i(M, N) = HF Tor_i(N, M), i = 1..4";
    std::optional<FPModule<K>> m, n;
    RingPtr<K> ring;
    int draw = 0;
    if (t == 0) {
      ring = rings_[0];
      m = n = residueField(ring);
    } else {
      for (; draw < kMaxAttempts && !m; ++draw) {
        Rng rng(config_.seed, suite_, t, draw);
        ring = pickRing(rng);
        auto a = randomCokernel(rng, ring, rng.between(1, 2), rng.between(1, 2));
        auto b = randomCokernel(rng, ring, rng.between(1, 2), rng.between(1, 2));
        if (isZero(a) || isZero(b)) continue;
        m = a;
        n = b;
      }
      if (!m) return noInstance(rec);
      --draw;
    }
    int d = config_.maxDegree.value_or(std::max(defaultDegreeBound(*m), defaultDegreeBound(*n)));
    for (int i = 1; i <= 4; ++i) {
      FPModule<K> a = tor(*m, *n, i, bound());
      FPModule<K> b = tor(*n, *m, i, bound());
      HilbertFunction ha = isZero(a) ? HilbertFunction{} : hilbertFunction(a, d);
      HilbertFunction hb = isZero(b) ? HilbertFunction{} : hilbertFunction(b, d);
      int lo = std::min(ha.values.empty() ? d : ha.low, hb.values.empty() ? d : hb.low);
      for (int e = lo; e <= d; ++e)
        if (ha.at(e) != hb.at(e)) {
          rec.computed = "Tor_" + std::to_string(i) + " differs in degree " + std::to_string(e);
          rec.status = Status::Fail;
          return;
        }
    }
    rec.computed = "equal through degree " + std::to_string(d) + " over " + ringName(rings_, ring) +
                   (t == 0 ? " (M = N = k)" : " (draw " + std::to_string(draw) + ")");
    rec.status = Status::Pass;
  }

  void fourTerm(int t, CheckRecord& rec) const {
    rec.expected = "alternating sum 0 in every degree";
    std::optional<FPModule<K>> m, n;
    std::string where;
    if (t == 0) {
      auto ring = rings_[1];
      m = FPModule<K>::cyclic(Ideal<K>::parse(ring, {"x"}));
      n = transpose(FPModule<K>::cyclic(Ideal<K>::parse(ring, {"y", "z", "w"})));
      where = "Example 2.4 data";
    } else {
      for (int a = 0; a < kMaxAttempts && !m; ++a) {
        Rng rng(config_.seed, suite_, t, a);
        const RingPtr<K>& ring = pickRing(rng);
        auto nn = randomPdOne(rng, ring);
        auto mm = randomTorsionless(rng, ring);
        if (!mm || !nn) continue;
        if (!isZero(tor(*nn, *mm, 1, bound()))) continue;
        m = mm;
        n = nn;
        where = ringName(rings_, ring) + " (draw " + std::to_string(a) + ")";
      }
      if (!m) return noInstance(rec);
    }
    FourTermResult r = fourTermDefect(*m, *n, bound(), config_.maxDegree);
    rec.computed = "max defect " + std::to_string(r.defect) + " over degrees " + std::to_string(r.low) + ".." +
                   std::to_string(r.high) + ", " + where;
    rec.status = r.defect == 0 ? Status::Pass : Status::Fail;
  }

  // Two membership queries per trial: a random combination of the
  // generators and a random form of the same degree.
  void gbOracle(int t, CheckRecord& rec) const {
    rec.expected = "Groebner membership = linear-algebra membership";
    Rng rng(config_.seed, suite_, t, 0);
    const RingPtr<K>& ring = pickRing(rng);
    Ideal<K> ideal{ring, {}};
    int gens = rng.between(1, 3);
    int top = 0;
    for (int g = 0; g < gens; ++g) {
      int d = rng.between(1, 2);
      Polynomial<K> p = randomPoly(rng, ring, d);
      if (p.isZero()) continue;
      ideal.gens.push_back(p);
      top = std::max(top, d);
    }
    int d = top + rng.between(0, 1);
    if (ideal.gens.empty()) d = rng.between(1, 2);
    Polynomial<K> combo;
    for (const auto& g : ideal.gens) {
      int e = d - g.lead().mono.degree();
      combo = ring->add(combo, ring->mul(randomPoly(rng, ring, e), g));
    }
    Polynomial<K> other = randomPoly(rng, ring, d);
    std::string out;
    bool agree = true;
    int members = 0;
    for (const auto* f : {&combo, &other}) {
      bool gb = isMember(*f, ideal);
      bool la = oracleMember(*f, ideal);
      if (gb != la) agree = false;
      members += gb;
    }
    rec.computed = std::string(agree ? "agree" : "DISAGREE") + " on 2 queries (" + std::to_string(members) +
                   " members) for " + ideal.toString() + " in " + ringName(rings_, ring);
    rec.status = agree ? Status::Pass : Status::Fail;
  }

  Config config_;
  std::string suite_;
  std::vector<RingPtr<K>> rings_;
};

template <class K>
Report runTyped(const std::string& suite, int trials, const Config& config) {
  Suites<K> s(config, suite);
  Report report;
  report.scenario = "property/" + suite;
  report.config = config;
  report.checks.resize(static_cast<std::size_t>(trials));
  parallelFor(report.checks.size(), config.jobs,
              [&](std::size_t i) { report.checks[i] = s.trial(static_cast<int>(i)); });
  return report;
}

}  // namespace

const std::vector<std::string>& propertySuiteNames() {
  static const std::vector<std::string> names = {"depth-formula", "obs-2.6", "tor-symmetry", "ab-four-term",
                                                 "gb-oracle"};
  return names;
}

Report runPropertySuite(const std::string& suite, int trials, const Config& config) {
  bool known = false;
  for (const auto& n : propertySuiteNames()) known = known || n == suite;
  if (!known) throw InvalidArgument("unknown property suite '" + suite + "'");
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  Config c = config;
  if (c.field.empty()) c.field = "gf32003";
  if (c.field == "gf32003") return runTyped<GF32003>(suite, trials, c);
  if (c.field == "qq") return runTyped<Rational>(suite, trials, c);
  if (c.field != "both") throw InvalidArgument("unknown field '" + c.field + "'");
  Report a = runTyped<GF32003>(suite, trials, c);
  Report b = runTyped<Rational>(suite, trials, c);
  for (auto& r : a.checks) r.name = "[gf32003] " + r.name;
  for (auto& r : b.checks) {
    r.name = "[qq] " + r.name;
    a.checks.push_back(std::move(r));
  }
  return a;
}

#define REFLEX_INSTANTIATE_FOUR_TERM(K) \
  template FourTermResult fourTermDefect(const FPModule<K>&, const FPModule<K>&, int, std::optional<int>);

REFLEX_INSTANTIATE_FOUR_TERM(GF32003)
REFLEX_INSTANTIATE_FOUR_TERM(Rational)

}  // namespace reflex::verify
