#include "reflex/invariants.hpp"

#include "reflex/errors.hpp"
#include "reflex/field.hpp"

namespace reflex {

std::string SerreReport::toString() const {
  std::string out = "n=" + std::to_string(n) + (holds ? " holds" : " fails");
  for (const auto& [i, zero] : certificate)
    out += "; Ext^" + std::to_string(i) + "(Tr M, R) " + (zero ? "= 0" : "!= 0");
  return out;
}

std::string DepthFormulaReport::toString() const {
  std::string out = "depth M = " + depthToString(depthM) + ", depth N = " + depthToString(depthN) +
                    ", depth R = " + depthToString(depthR) + ", depth M(x)N = " + depthToString(depthTensor);
  out += torIndependent ? "; Tor_i = 0 for 1 <= i <= " : "; Tor nonvanishing by ";
  out += std::to_string(torChecked);
  out += certification == Certification::Certified ? " (certified)" : " (up to bound)";
  if (vacuous) out += "; vacuous";
  else out += holds ? "; equality holds" : "; equality fails";
  return out;
}

template <class K>
int height(const Ideal<K>& p) {
  const auto& flags = p.ring->flags();
  if (!flags.cohenMacaulay || !flags.equidimensional)
    throw UnsupportedRing("height needs a Cohen-Macaulay equidimensional ring; " + p.ring->describe() +
                          " is not flagged as such");
  int quotientDim = dimension(FPModule<K>::cyclic(p));
  if (quotientDim < 0) throw DomainError("height of the unit ideal");
  return p.ring->dimension() - quotientDim;
}

template <class K>
bool supportContains(const FPModule<K>& m, const Ideal<K>& p) {
  if (m.ring() != p.ring) throw RingMismatch("module and ideal over different rings");
  return isSubset(annihilator(m), p);
}

template <class K>
bool isTorsion(const FPModule<K>& m) {
  Depth g = grade(annihilator(m));
  return !g || *g >= 1;
}

template <class K>
SerreReport torsionfreeness(const FPModule<K>& m, int n, int bound) {
  if (n < 0) throw InvalidArgument("Serre index must be nonnegative");
  SerreReport report;
  report.n = n;
  if (n == 0) return report;
  FPModule<K> tr = transpose(m);
  FPModule<K> r = FPModule<K>::free(m.ring(), {0});
  for (int i = 1; i <= n; ++i) {
    bool zero = isZero(ext(tr, r, i, bound));
    report.certificate.emplace_back(i, zero);
    if (!zero) report.holds = false;
  }
  return report;
}

template <class K>
SerreReport serre(const FPModule<K>& m, int n, int bound) {
  if (n > 0 && !m.ring()->flags().gorenstein)
    throw UnsupportedRing("serre condition (S_" + std::to_string(n) + ") requires a Gorenstein ring; " +
                          m.ring()->describe() + " is not Gorenstein");
  return torsionfreeness(m, n, bound);
}

template <class K>
int rank(const FPModule<K>& m, int bound) {
  Resolution<K> res = resolve(m, bound);
  if (!res.terminated)
    throw DomainError("rank is only certified for modules of finite projective dimension; resolution did not end by length " +
                      std::to_string(bound));
  int sum = 0;
  auto betti = res.bettiNumbers();
  for (std::size_t i = 0; i < betti.size(); ++i)
    sum += (i % 2 == 0 ? 1 : -1) * static_cast<int>(betti[i]);
  return res.module.numGenerators() == 0 ? 0 : sum;
}

template <class K>
LocalFreenessCertificate localFreeness(const FPModule<K>& m, const Ideal<K>& p) {
  if (m.ring() != p.ring) throw RingMismatch("module and ideal over different rings");
  FPModule<K> mm = minimalize(m);
  int r0 = static_cast<int>(mm.numGenerators());
  LocalFreenessCertificate cert;
  for (int j = 0; j <= r0; ++j) {
    Ideal<K> fj = fittingIdeal(mm, j);
    if (isSubset(fj, p)) continue;
    cert.index = j;
    if (j == 0) {
      cert.free = true;
      cert.detail = "Fitt_0 not in p: the localization is zero";
      return cert;
    }
    Ideal<K> prev = fittingIdeal(mm, j - 1);
    Ideal<K> ann = colon(Ideal<K>{p.ring, {}}, prev);
    cert.free = !isSubset(ann, p);
    cert.detail = "Fitt_" + std::to_string(j) + " not in p; ann(Fitt_" + std::to_string(j - 1) + ") = " +
                  ann.toString() + (cert.free ? " not in p" : " inside p");
    return cert;
  }
  throw DomainError("every Fitting ideal lies in " + p.toString() + "; the ideal is not proper");
}

template <class K>
DepthFormulaReport checkDepthFormula(const FPModule<K>& m, const FPModule<K>& n, int bound) {
  requireSameRing(m, n);
  DepthFormulaReport report;
  PdResult pm = pd(m, bound);
  PdResult pn = pd(n, bound);
  const FPModule<K>* finite = nullptr;
  const FPModule<K>* other = nullptr;
  int upTo = bound - 1;
  if (pn.isFinite()) {
    finite = &n;
    other = &m;
    upTo = pn.value();
  } else if (pm.isFinite()) {
    finite = &m;
    other = &n;
    upTo = pm.value();
  }
  report.certification = finite ? Certification::Certified : Certification::Advisory;
  report.torIndependent = true;
  report.torChecked = 0;
  for (int i = 1; i <= upTo; ++i) {
    report.torChecked = i;
    FPModule<K> t = finite ? tor(*finite, *other, i, bound) : tor(m, n, i, bound);
    if (!isZero(t)) {
      report.torIndependent = false;
      break;
    }
  }
  report.depthM = depth(m);
  report.depthN = depth(n);
  report.depthR = depth(FPModule<K>::free(m.ring(), {0}));
  report.depthTensor = depth(tensor(m, n));
  report.vacuous = !report.depthM || !report.depthN || !report.depthR || !report.depthTensor;
  if (!report.vacuous)
    report.holds = *report.depthM + *report.depthN == *report.depthR + *report.depthTensor;
  return report;
}

template <class K>
std::optional<RigidityWitness<K>> rigidityWitness(const FPModule<K>& m, const FPModule<K>& n, int bound) {
  requireSameRing(m, n);
  FPModule<K> trN = transpose(n);
  for (int k = 1; k <= 2; ++k) {
    FPModule<K> y = transpose(syzygyModule(trN, k));
    RigidityWitness<K> w{k, y, isZero(tor(y, m, 1, bound)), false};
    if (!w.tor1Zero) continue;
    w.tor2Nonzero = !isZero(tor(y, m, 2, bound));
    if (w.valid()) return w;
  }
  return std::nullopt;
}

#define REFLEX_INSTANTIATE_INVARIANTS(K)                                                           \
  template int height(const Ideal<K>&);                                                            \
  template bool supportContains(const FPModule<K>&, const Ideal<K>&);                              \
  template bool isTorsion(const FPModule<K>&);                                                     \
  template SerreReport torsionfreeness(const FPModule<K>&, int, int);                              \
  template SerreReport serre(const FPModule<K>&, int, int);                                        \
  template int rank(const FPModule<K>&, int);                                                      \
  template LocalFreenessCertificate localFreeness(const FPModule<K>&, const Ideal<K>&);             \
  template DepthFormulaReport checkDepthFormula(const FPModule<K>&, const FPModule<K>&, int);      \
  template std::optional<RigidityWitness<K>> rigidityWitness(const FPModule<K>&,                   \
                                                             const FPModule<K>&, int);

REFLEX_INSTANTIATE_INVARIANTS(GF32003)
REFLEX_INSTANTIATE_INVARIANTS(Rational)

}  // namespace reflex
