#ifndef REFLEX_RING_HPP
#define REFLEX_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflex/vec.hpp"

namespace reflex {

/// Structural properties of a quotient ring. Every flag is either computed
/// from a free resolution over the ambient ring or (for equidimensionality of
/// non-Cohen-Macaulay rings only) declared by the user.
struct RingFlags {
  bool completeIntersection = false;
  bool gorenstein = false;
  bool cohenMacaulay = false;
  bool equidimensional = false;
};

/// Flags the user may assert when constructing a ring. A declaration that
/// contradicts a computed flag is rejected.
struct DeclaredFlags {
  std::optional<bool> completeIntersection;
  std::optional<bool> gorenstein;
  std::optional<bool> cohenMacaulay;
  std::optional<bool> equidimensional;
};

enum class ArithOp { Add, Sub, Mul, ScalarMul };

/// Standard graded ring k[x_1..x_n]/I with I homogeneous. Immutable; shared
/// through RingPtr. Elements are polynomials kept in normal form modulo the
/// stored Groebner basis of I.
template <class K>
class QuotientRing {
public:
  QuotientRing(std::vector<std::string> variables, OrderKind order,
               std::vector<Polynomial<K>> definingIdeal, std::vector<Polynomial<K>> definingGb,
               RingFlags flags, int ambientDimension);

  const std::vector<std::string>& variables() const { return variables_; }
  int nvars() const { return static_cast<int>(variables_.size()); }
  OrderKind orderKind() const { return order_; }
  /// Rank-one order used for ring elements.
  const ModuleOrder& polyOrder() const { return polyOrder_; }
  ModuleOrder moduleOrder(std::vector<int> twists) const { return ModuleOrder(order_, std::move(twists)); }

  const std::vector<Polynomial<K>>& definingIdeal() const { return definingIdeal_; }
  const std::vector<Polynomial<K>>& definingGb() const { return definingGb_; }
  bool isPolynomialRing() const { return definingGb_.empty(); }
  const RingFlags& flags() const { return flags_; }
  /// Krull dimension of the ring.
  int dimension() const { return dimension_; }

  Polynomial<K> reduce(const Polynomial<K>& p) const;
  Polynomial<K> variable(int index) const;
  Polynomial<K> constant(K c) const { return Polynomial<K>::constant(std::move(c)); }

  Polynomial<K> add(const Polynomial<K>& a, const Polynomial<K>& b) const;
  Polynomial<K> sub(const Polynomial<K>& a, const Polynomial<K>& b) const;
  Polynomial<K> mul(const Polynomial<K>& a, const Polynomial<K>& b) const;
  Polynomial<K> scale(const Polynomial<K>& a, const K& c) const;
  Polynomial<K> neg(const Polynomial<K>& a) const { return scale(a, -K::one()); }
  /// Dispatches to add/sub/mul; ScalarMul requires `b` to be a constant.
  Polynomial<K> arith(ArithOp op, const Polynomial<K>& a, const Polynomial<K>& b) const;

  Polynomial<K> parse(const std::string& text) const;
  std::string format(const Polynomial<K>& p) const { return formatPolynomial(p, variables_); }

  /// Ring description such as "k[x,y,z,w]/(x*y)".
  std::string describe() const;

private:
  void checkMember(const Polynomial<K>& p) const;

  std::vector<std::string> variables_;
  OrderKind order_;
  ModuleOrder polyOrder_;
  std::vector<Polynomial<K>> definingIdeal_;
  std::vector<Polynomial<K>> definingGb_;
  RingFlags flags_;
  int dimension_;
};

template <class K>
using RingPtr = std::shared_ptr<const QuotientRing<K>>;

/// Builds k[vars]/(ideal): computes the reduced Groebner basis of the ideal,
/// the Krull dimension, and the structural flags. Throws InvalidArgument for
/// inhomogeneous or unit ideals, or when `declared` contradicts a computed flag.
template <class K>
RingPtr<K> makeRing(const std::vector<std::string>& variables, OrderKind order,
                    const std::vector<std::string>& idealText, const DeclaredFlags& declared = {});

template <class K>
RingPtr<K> makeRing(const std::vector<std::string>& variables, OrderKind order,
                    const std::vector<Polynomial<K>>& ideal, const DeclaredFlags& declared = {});

/// Polynomial ring k[vars].
template <class K>
RingPtr<K> makePolynomialRing(const std::vector<std::string>& variables,
                              OrderKind order = OrderKind::Grevlex) {
  return makeRing<K>(variables, order, std::vector<Polynomial<K>>{});
}

/// Parses text in the polynomial grammar over the given variable names
/// without reducing modulo any ideal.
template <class K>
Polynomial<K> parseAmbient(const std::string& text, const std::vector<std::string>& variables,
                           OrderKind order);

}  // namespace reflex

#endif  // REFLEX_RING_HPP
