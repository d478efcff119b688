#ifndef REFLEX_INVARIANTS_HPP
#define REFLEX_INVARIANTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflex/homology.hpp"

namespace reflex {

/// Krull dimension of a module; -1 for zero.
template <class K>
int dimModule(const FPModule<K>& m) {
  return dimension(m);
}

/// height(p) = dim R - dim R/p. Requires a Cohen-Macaulay equidimensional
/// ring; throws UnsupportedRing otherwise.
template <class K>
int height(const Ideal<K>& p);

/// p in Supp(M), tested as ann(M) ⊆ p.
template <class K>
bool supportContains(const FPModule<K>& m, const Ideal<K>& p);

/// ann(M) contains a nonzerodivisor, i.e. grade(ann M) >= 1.
template <class K>
bool isTorsion(const FPModule<K>& m);

struct SerreReport {
  int n = 0;
  bool holds = true;
  /// (i, Ext^i(Tr M, R) == 0) for i = 1..n.
  std::vector<std::pair<int, bool>> certificate;

  std::string toString() const;
};

/// n-torsionfreeness: Ext^i(Tr M, R) = 0 for 1 <= i <= n. Identified with
/// (S_n) only over Gorenstein rings, so that gate is enforced.
template <class K>
SerreReport serre(const FPModule<K>& m, int n, int bound = kDefaultResolutionBound);

/// The same certificate without the Gorenstein gate.
template <class K>
SerreReport torsionfreeness(const FPModule<K>& m, int n, int bound = kDefaultResolutionBound);

template <class K>
bool isTorsionless(const FPModule<K>& m) {
  return torsionfreeness(m, 1).holds;
}

template <class K>
bool isReflexive(const FPModule<K>& m) {
  return torsionfreeness(m, 2).holds;
}

/// Alternating sum of Betti numbers. Throws DomainError unless the minimal
/// resolution ends within the bound.
template <class K>
int rank(const FPModule<K>& m, int bound = kDefaultResolutionBound);

struct LocalFreenessCertificate {
  bool free = false;
  /// Least j with Fitt_j(M) not inside p.
  int index = 0;
  std::string detail;
};

template <class K>
LocalFreenessCertificate localFreeness(const FPModule<K>& m, const Ideal<K>& p);

/// M_p is free, decided through Fitting ideals.
template <class K>
bool isLocallyFreeAt(const FPModule<K>& m, const Ideal<K>& p) {
  return localFreeness(m, p).free;
}

enum class Certification { Certified, Advisory };

struct DepthFormulaReport {
  Depth depthM, depthN, depthR, depthTensor;
  /// Certified when one module has finite pd d and Tor_1..Tor_d vanish.
  Certification certification = Certification::Advisory;
  bool torIndependent = false;
  /// Highest Tor index checked.
  int torChecked = 0;
  /// Some depth is infinite, so the equality carries no information.
  bool vacuous = false;
  bool holds = false;

  std::string toString() const;
};

template <class K>
DepthFormulaReport checkDepthFormula(const FPModule<K>& m, const FPModule<K>& n,
                                     int bound = kDefaultResolutionBound);

template <class K>
struct RigidityWitness {
  int n = 0;
  FPModule<K> y;
  bool tor1Zero = false;
  bool tor2Nonzero = false;

  bool valid() const { return tor1Zero && tor2Nonzero; }
};

/// Y_n = Tr Omega^n Tr N for n = 1, 2; the first n with Tor_1(Y_n, M) = 0
/// and Tor_2(Y_n, M) != 0.
template <class K>
std::optional<RigidityWitness<K>> rigidityWitness(const FPModule<K>& m, const FPModule<K>& n,
                                                  int bound = kDefaultResolutionBound);

}  // namespace reflex

#endif  // REFLEX_INVARIANTS_HPP
