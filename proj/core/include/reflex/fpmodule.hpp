#ifndef REFLEX_FPMODULE_HPP
#define REFLEX_FPMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "reflex/groebner.hpp"
#include "reflex/hilbert.hpp"
#include "reflex/matrix.hpp"
#include "reflex/ring.hpp"

namespace reflex {

/// Graded module coker(A : F1 -> F0). Generator degrees are the twists of
/// F0, relation degrees the twists of F1; entry (i, j) of A is homogeneous of
/// degree relationDegree(j) - generatorDegree(i). Entries are kept reduced
/// modulo the ring's defining ideal. The zero module has no generators.
template <class K>
class FPModule {
public:
  FPModule(RingPtr<K> ring, std::vector<int> generatorDegrees, std::vector<int> relationDegrees,
           Matrix<K> presentation);

  static FPModule free(RingPtr<K> ring, std::vector<int> twists);
  static FPModule zero(RingPtr<K> ring);
  /// R/I, generated in degree 0.
  static FPModule cyclic(const Ideal<K>& ideal);
  /// coker(matrix) with twists inferred from homogeneity: within each
  /// connected block of nonzero entries the smallest generator degree is 0.
  static FPModule cokernel(RingPtr<K> ring, Matrix<K> matrix);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<int>& generatorDegrees() const { return genDegrees_; }
  const std::vector<int>& relationDegrees() const { return relDegrees_; }
  const Matrix<K>& presentation() const { return matrix_; }
  std::size_t numGenerators() const { return genDegrees_.size(); }
  std::size_t numRelations() const { return relDegrees_.size(); }
  FreeModule<K> target() const { return {ring_, genDegrees_}; }
  FreeModule<K> source() const { return {ring_, relDegrees_}; }
  /// Relations as vectors of the target free module.
  std::vector<Vec<K>> relations() const { return matrix_.columns(target().order()); }

  std::string toString() const;

private:
  RingPtr<K> ring_;
  std::vector<int> genDegrees_;
  std::vector<int> relDegrees_;
  Matrix<K> matrix_;
};

/// Matrix product with entries reduced modulo the defining ideal.
template <class K>
Matrix<K> multiply(const QuotientRing<K>& ring, const Matrix<K>& a, const Matrix<K>& b);

template <class K>
void requireSameRing(const FPModule<K>& a, const FPModule<K>& b);

/// Isomorphic module with a minimal presentation: unit entries eliminated
/// (row-major first unit as pivot), then relations pruned to a minimal
/// generating set of the relation module.
template <class K>
FPModule<K> minimalize(const FPModule<K>& m);

template <class K>
bool isMinimal(const FPModule<K>& m);

template <class K>
bool isZero(const FPModule<K>& m);

/// Minimal number of generators.
template <class K>
std::size_t mu(const FPModule<K>& m);

/// True when the minimal presentation has no relations.
template <class K>
bool isFree(const FPModule<K>& m);

template <class K>
FPModule<K> directSum(const FPModule<K>& a, const FPModule<K>& b);

/// M(a): every degree lowered by a.
template <class K>
FPModule<K> shift(const FPModule<K>& m, int a);

template <class K>
FPModule<K> tensor(const FPModule<K>& m, const FPModule<K>& n);

template <class K>
FPModule<K> hom(const FPModule<K>& m, const FPModule<K>& n);

template <class K>
FPModule<K> dual(const FPModule<K>& m);

/// The submodule of F0/im(D) generated by the columns of G, presented
/// through the syzygies of [G | D]. Minimalized.
template <class K>
FPModule<K> subquotient(const RingPtr<K>& ring, const std::vector<int>& twists,
                        const Matrix<K>& gens, const std::vector<int>& genDegrees,
                        const Matrix<K>& rels, const std::vector<int>& relDegrees);

/// Homomorphism between presented modules, given by the images of the
/// source generators as columns over the target's generators.
template <class K>
struct ModuleMap {
  FPModule<K> source;
  FPModule<K> target;
  Matrix<K> matrix;
};

/// Checks shapes, degrees and that relations map into relations; throws
/// InvalidArgument otherwise.
template <class K>
void validate(const ModuleMap<K>& f);

template <class K>
FPModule<K> kernel(const ModuleMap<K>& f);

template <class K>
FPModule<K> image(const ModuleMap<K>& f);

template <class K>
FPModule<K> cokernel(const ModuleMap<K>& f);

/// Homology at C of  Cin --in--> C --out--> Cout, with both maps given on
/// generators. `out` may be std::nullopt for the last term of a complex.
template <class K>
FPModule<K> homologyAt(const FPModule<K>& c, const std::optional<Matrix<K>>& out,
                       const FPModule<K>& cout, const Matrix<K>& in,
                       const std::vector<int>& inDegrees);

/// Ideal of t x t minors, t = rank F0 - j; (0) for j < 0, (1) for t <= 0.
template <class K>
Ideal<K> fittingIdeal(const FPModule<K>& m, int j);

/// Ideal of the t x t minors of a matrix over the ring.
template <class K>
Ideal<K> minorsIdeal(const RingPtr<K>& ring, const Matrix<K>& a, int t);

template <class K>
Ideal<K> annihilator(const FPModule<K>& m);

template <class K>
HilbertSeries hilbertSeries(const FPModule<K>& m);

/// Values from the smallest generator degree (0 for the zero module)
/// through maxDegree.
template <class K>
HilbertFunction hilbertFunction(const FPModule<K>& m, int maxDegree);

/// Default degree bound: largest generator degree plus 10.
template <class K>
int defaultDegreeBound(const FPModule<K>& m);

/// Krull dimension; -1 for the zero module.
template <class K>
int dimension(const FPModule<K>& m);

/// Re-presents a module over a quotient S = R/J of `ring` as an R-module by
/// appending g*e_k for every generator g of J and every generator e_k.
template <class K>
FPModule<K> restrictScalars(const FPModule<K>& m, const RingPtr<K>& ring);

}  // namespace reflex

#endif  // REFLEX_FPMODULE_HPP
