#ifndef REFLEX_BUCHBERGER_HPP
#define REFLEX_BUCHBERGER_HPP

#include <climits>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "reflex/vec.hpp"

namespace reflex {

/// Full reduction of `v` modulo a Groebner basis of an ideal of the ambient
/// ring, applied componentwise. `ringGb` elements live in component 0 and
/// must be monic.
template <class K>
Vec<K> reduceModIdeal(const Vec<K>& v, const std::vector<Vec<K>>& ringGb,
                      const ModuleOrder& order);

/// Homogeneous Buchberger algorithm for submodules of a graded free module
/// over the ambient polynomial ring, optionally modulo an ideal I (given by
/// its Groebner basis) of that ring.
///
/// Quotient submodules are handled by seeding the basis with g*e_k for every
/// g in GB(I) and every component k. Inputs are processed degree by degree
/// after all S-pairs of the same degree, which makes the set of inputs that
/// survive reduction a minimal generating set of the image in (S/I)^r.
///
/// With tracking enabled every basis element carries its representation in
/// terms of the inputs (modulo I), and every S-pair or input that reduces to
/// zero yields a syzygy of the inputs over S/I. Pair elimination uses the
/// Gebauer-Moeller criteria; the coprime-leads criterion is only applied to
/// ideals without tracking since it loses syzygies and is invalid for modules.
template <class K>
class BuchbergerEngine {
public:
  struct Options {
    bool track = false;
  };

  BuchbergerEngine(ModuleOrder order, std::vector<Vec<K>> ringGb, Options options);
  BuchbergerEngine(ModuleOrder order, std::vector<Vec<K>> ringGb)
      : BuchbergerEngine(std::move(order), std::move(ringGb), Options{}) {}

  /// Adds a homogeneous input of the given degree (the degree matters for
  /// zero inputs, which still index a generator). Inputs are indexed in
  /// call order.
  void addInput(Vec<K> v, int degree);
  std::size_t inputCount() const { return inputs_.size(); }

  /// Runs to completion, or through `maxDegree` when given.
  void run(int maxDegree = INT_MAX);

  const ModuleOrder& order() const { return order_; }
  const std::vector<int>& inputDegrees() const { return inputDegrees_; }

  /// Indices of the inputs kept as minimal generators, ascending.
  std::vector<std::size_t> minimalInputs() const;
  /// Syzygies over S/I of the inputs, expressed in the free module with
  /// one generator per input (twist = input degree). Requires tracking.
  const std::vector<Vec<K>>& syzygies() const { return syzygies_; }

  /// Every basis element, including the seeded ones, in insertion order.
  std::vector<Vec<K>> basis() const;
  /// Minimal, tail-reduced, monic basis (insertion order).
  std::vector<Vec<K>> reducedBasis() const;

  Vec<K> normalForm(const Vec<K>& v) const;
  bool reducesToZero(const Vec<K>& v) const;

  /// Lead terms of the current basis, as (monomial, component) pairs.
  std::vector<std::pair<Monomial, std::uint32_t>> leadTerms() const;

  std::size_t pairsReduced() const { return pairsReduced_; }

private:
  struct Element {
    Vec<K> v;
    Vec<K> rep;
    Monomial lm;
    std::uint32_t comp;
    int degree;
    bool seeded;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t comp;
    int degree;
  };

  bool pairLess(const Pair& a, const Pair& b) const;
  int findReducer(const Monomial& m, std::uint32_t comp) const;
  // Full reduction; updates `rep` alongside when tracking.
  void reduce(Vec<K>& v, Vec<K>* rep) const;
  void insert(Vec<K> v, Vec<K> rep, bool seeded, bool updatePairs);
  void update(std::size_t t);
  void recordSyzygy(Vec<K> rep);
  ModuleOrder repOrder() const;

  ModuleOrder order_;
  std::vector<Vec<K>> ringGb_;
  Options options_;
  bool seeded_ = false;

  std::vector<Vec<K>> inputs_;
  std::vector<int> inputDegrees_;
  std::vector<bool> inputDone_;
  std::vector<bool> inputMinimal_;

  std::vector<Element> elements_;
  std::vector<std::vector<std::size_t>> byComp_;
  std::vector<Pair> pairs_;
  std::vector<Vec<K>> syzygies_;
  std::size_t pairsReduced_ = 0;
};

}  // namespace reflex

#endif  // REFLEX_BUCHBERGER_HPP
