#ifndef REFLEX_HOMOLOGY_HPP
#define REFLEX_HOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflex/fpmodule.hpp"

namespace reflex {

inline constexpr int kDefaultResolutionBound = 8;

/// Projective dimension as far as a bounded resolution can tell.
class PdResult {
public:
  enum class Kind { Finite, AtLeast, ZeroModule };

  static PdResult finite(int n) { return PdResult(Kind::Finite, n); }
  static PdResult atLeast(int bound) { return PdResult(Kind::AtLeast, bound); }
  static PdResult zeroModule() { return PdResult(Kind::ZeroModule, 0); }

  Kind kind() const { return kind_; }
  bool isFinite() const { return kind_ == Kind::Finite; }
  int value() const { return value_; }
  /// "Finite(n)", "AtLeast(L)" or "-inf" (the zero module).
  std::string toString() const;

  friend bool operator==(const PdResult& a, const PdResult& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

private:
  PdResult(Kind kind, int value) : kind_(kind), value_(value) {}
  Kind kind_;
  int value_;
};

/// Graded Betti numbers beta_{i,j}: homological index i, internal degree j.
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;

  std::size_t total(int i) const;
  int length() const;
  /// Staircase layout: column i, row j - i, "." for zero.
  std::string toString() const;
};

/// Minimal graded free resolution F_L -> ... -> F_1 -> F_0 of a module,
/// truncated at length `bound`.
template <class K>
struct Resolution {
  FPModule<K> module;
  /// twists[i] are the generator degrees of F_i, i = 0..length().
  std::vector<std::vector<int>> twists;
  /// differentials[i - 1] = d_i : F_i -> F_{i-1}.
  std::vector<Matrix<K>> differentials;
  int bound = 0;
  /// True when the resolution is known to end at length().
  bool terminated = false;

  int length() const { return static_cast<int>(twists.size()) - 1; }
  std::vector<std::size_t> bettiNumbers() const;
  BettiTable betti() const;
  PdResult pd() const;
  /// d_i o d_{i+1} = 0 for every consecutive pair, checked exactly.
  bool isComplex() const;
  /// No differential has a unit entry.
  bool isMinimal() const;
};

/// Minimal resolution through F_bound. When F_bound is nonzero one further
/// syzygy computation decides whether the resolution ends there.
template <class K>
Resolution<K> resolve(const FPModule<K>& m, int bound = kDefaultResolutionBound);

template <class K>
PdResult pd(const FPModule<K>& m, int bound = kDefaultResolutionBound);

/// Auslander transpose: coker of the dual of a minimal presentation.
template <class K>
FPModule<K> transpose(const FPModule<K>& m);

/// Omega^n(M), the image of d_n; Omega^0(M) = M.
template <class K>
FPModule<K> syzygyModule(const FPModule<K>& m, int n);

/// Tor_i(M, N) from a minimal resolution of M. Throws BoundExceeded when
/// the resolution would have to be longer than `bound`.
template <class K>
FPModule<K> tor(const FPModule<K>& m, const FPModule<K>& n, int i,
                int bound = kDefaultResolutionBound);

template <class K>
FPModule<K> ext(const FPModule<K>& m, const FPModule<K>& n, int i,
                int bound = kDefaultResolutionBound);

/// Depth, or nullopt for infinity (the zero module).
using Depth = std::optional<int>;

std::string depthToString(const Depth& d);

/// Depth with respect to the irrelevant ideal, as the first i with
/// Ext^i(k, M) != 0. Raises InternalError if nothing is found by dim R + 1.
template <class K>
Depth depth(const FPModule<K>& m);

/// Depth as n - pd_S(M) over the ambient polynomial ring S in n variables
/// (Auslander-Buchsbaum; depth over R and over S agree).
template <class K>
Depth depthAuslanderBuchsbaum(const FPModule<K>& m);

/// grade(I, M): first i with Ext^i(R/I, M) != 0; nullopt (infinity) when
/// M = IM.
template <class K>
Depth grade(const Ideal<K>& ideal, const FPModule<K>& m);

template <class K>
Depth grade(const Ideal<K>& ideal) {
  return grade(ideal, FPModule<K>::free(ideal.ring, {0}));
}

/// The residue field R/(x_1..x_n).
template <class K>
FPModule<K> residueField(const RingPtr<K>& ring);

}  // namespace reflex

#endif  // REFLEX_HOMOLOGY_HPP
