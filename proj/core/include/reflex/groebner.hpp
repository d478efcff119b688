#ifndef REFLEX_GROEBNER_HPP
#define REFLEX_GROEBNER_HPP

#include <string>
#include <vector>

#include "reflex/matrix.hpp"
#include "reflex/ring.hpp"

namespace reflex {

/// Graded free module R(-a_1) + ... + R(-a_r); twists are generator degrees.
template <class K>
struct FreeModule {
  RingPtr<K> ring;
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  ModuleOrder order() const { return ring->moduleOrder(twists); }
  int maxTwist() const;
  int minTwist() const;
};

template <class K>
bool sameAmbient(const FreeModule<K>& a, const FreeModule<K>& b) {
  return a.ring == b.ring && a.twists == b.twists;
}

/// Groebner basis over the ambient polynomial ring of a submodule of a free
/// module over R = S/I. The elements include the lifted relations of I, so
/// the basis describes the submodule of (S/I)^r through its preimage in S^r.
/// Elements are monic, auto-reduced, tail-reduced.
template <class K>
class GroebnerBasis {
public:
  GroebnerBasis(FreeModule<K> ambient, std::vector<Vec<K>> elements)
      : ambient_(std::move(ambient)), order_(ambient_.order()), elements_(std::move(elements)) {}

  const FreeModule<K>& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Vec<K>>& elements() const { return elements_; }

  Vec<K> normalForm(const Vec<K>& v) const;
  bool contains(const Vec<K>& v) const { return normalForm(v).isZero(); }

  /// Buchberger criterion: every S-vector of every same-component pair
  /// reduces to zero. Exhaustive (no pair elimination).
  bool verify() const;
  /// Audit text: the basis followed by one line per checked S-pair.
  std::string certificate() const;

private:
  FreeModule<K> ambient_;
  ModuleOrder order_;
  std::vector<Vec<K>> elements_;
};

/// Reduced Groebner basis of the submodule of `ambient` generated by `gens`.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Vec<K>>& gens, const FreeModule<K>& ambient);

template <class K>
Vec<K> normalForm(const Vec<K>& v, const GroebnerBasis<K>& gb) {
  return gb.normalForm(v);
}

/// Syzygies over R of homogeneous generators `gens` (one degree per
/// generator; required since generators may be zero). The result lives in
/// the free module with twists `degrees` and is reduced modulo I, but not
/// necessarily minimal.
template <class K>
std::vector<Vec<K>> syzygies(const std::vector<Vec<K>>& gens, const std::vector<int>& degrees,
                             const FreeModule<K>& ambient);

/// Syzygy matrix of the columns of `m` (source twists `degrees`), as a
/// matrix whose columns generate the syzygy module minimally.
template <class K>
Matrix<K> syzygyMatrix(const Matrix<K>& m, const FreeModule<K>& target,
                       const std::vector<int>& degrees);

/// Indices of a minimal generating subset of the images in R^r of `gens`,
/// chosen degree by degree with ties broken by list position.
template <class K>
std::vector<std::size_t> minimalGeneratorIndices(const std::vector<Vec<K>>& gens,
                                                 const std::vector<int>& degrees,
                                                 const FreeModule<K>& ambient);

/// Homogeneous ideal of a quotient ring, given by generators.
template <class K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<Polynomial<K>> gens;

  static Ideal parse(const RingPtr<K>& ring, const std::vector<std::string>& texts);
  static Ideal unit(const RingPtr<K>& ring) {
    return Ideal{ring, {Polynomial<K>::constant(K::one())}};
  }
  std::string toString() const;
};

/// Groebner basis of the ideal's preimage in the ambient ring.
template <class K>
GroebnerBasis<K> idealGroebnerBasis(const Ideal<K>& ideal);

/// Drops zero and redundant generators, keeping a minimal generating set.
template <class K>
Ideal<K> minimalize(const Ideal<K>& ideal);

template <class K>
bool isMember(const Polynomial<K>& f, const Ideal<K>& ideal);

/// Every generator of `a` lies in `b`.
template <class K>
bool isSubset(const Ideal<K>& a, const Ideal<K>& b);

template <class K>
bool isZeroIdeal(const Ideal<K>& ideal);

template <class K>
bool isUnitIdeal(const Ideal<K>& ideal);

template <class K>
Ideal<K> idealSum(const Ideal<K>& a, const Ideal<K>& b);

template <class K>
Ideal<K> idealProduct(const Ideal<K>& a, const Ideal<K>& b);

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b);

/// (a : b) = { r in R : r b ⊆ a }.
template <class K>
Ideal<K> colon(const Ideal<K>& a, const Ideal<K>& b);

/// (N : v) = { r in R : r v ∈ N } for the submodule N of `ambient`
/// generated by `gens`.
template <class K>
Ideal<K> submoduleColon(const std::vector<Vec<K>>& gens, const Vec<K>& v,
                        const FreeModule<K>& ambient);

/// Annihilator of the cokernel of a presentation matrix with target `target`:
/// the intersection over generators e_i of (image : e_i).
template <class K>
Ideal<K> annihilatorOfCokernel(const Matrix<K>& presentation, const FreeModule<K>& target,
                               const std::vector<int>& sourceTwists);

}  // namespace reflex

#endif  // REFLEX_GROEBNER_HPP
