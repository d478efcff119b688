#include <set>

#include "reflex/buchberger.hpp"
#include "reflex/errors.hpp"
#include "reflex/field.hpp"
#include "reflex/groebner.hpp"
#include "reflex/hilbert.hpp"
#include "reflex/ring.hpp"

namespace reflex {

namespace {

void checkVariables(const std::vector<std::string>& variables) {
  if (variables.size() > static_cast<std::size_t>(kMaxVars))
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InvalidArgument("invalid variable name '" + v + "'");
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InvalidArgument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable '" + v + "'");
  }
}

void checkDeclared(const char* name, const std::optional<bool>& declared, bool computed) {
  if (declared && *declared != computed)
    throw InvalidArgument(std::string("declared flag '") + name + "' contradicts the computed value (" +
                          (computed ? "true" : "false") + ")");
}

}  // namespace

template <class K>
RingPtr<K> makeRing(const std::vector<std::string>& variables, OrderKind order,
                    const std::vector<Polynomial<K>>& ideal, const DeclaredFlags& declared) {
  checkVariables(variables);
  int n = static_cast<int>(variables.size());
  ModuleOrder po(order, {0});

  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal) {
    for (const auto& t : g) {
      if (t.comp != 0) throw InvalidArgument("ideal generators must be polynomials");
      for (int i = n; i < kMaxVars; ++i)
        if (t.mono[i] != 0) throw InvalidArgument("ideal generator uses an undeclared variable");
    }
    if (g.isZero()) continue;
    if (!vec::isHomogeneous(g, po))
      throw InvalidArgument("defining ideal must be homogeneous: " + formatPolynomial(g, variables));
    gens.push_back(g);
  }

  RingFlags regular{true, true, true, true};
  auto ambient = std::make_shared<const QuotientRing<K>>(variables, order, std::vector<Polynomial<K>>{},
                                                         std::vector<Polynomial<K>>{}, regular, n);
  if (gens.empty()) {
    checkDeclared("complete_intersection", declared.completeIntersection, true);
    checkDeclared("gorenstein", declared.gorenstein, true);
    checkDeclared("cohen_macaulay", declared.cohenMacaulay, true);
    checkDeclared("equidimensional", declared.equidimensional, true);
    return ambient;
  }

  BuchbergerEngine<K> engine(po, {});
  for (const auto& g : gens) engine.addInput(g, *vec::homogeneousDegree(g, po));
  engine.run();
  std::vector<Polynomial<K>> gb = engine.reducedBasis();
  std::vector<Monomial> leads;
  for (const auto& g : gb) {
    if (g.lead().mono.isOne()) throw InvalidArgument("defining ideal is the unit ideal");
    leads.push_back(g.lead().mono);
  }
  HilbertSeries hs{monomialIdealNumerator(leads), n};
  int dim = hs.dimension();
  int codim = n - dim;

  // minimal free resolution of S/I over the ambient ring S
  std::vector<std::size_t> keep = engine.minimalInputs();
  std::vector<Vec<K>> minimal;
  std::vector<int> degrees;
  for (auto k : keep) {
    minimal.push_back(gens[k]);
    degrees.push_back(*vec::homogeneousDegree(gens[k], po));
  }
  int mu = static_cast<int>(minimal.size());
  Matrix<K> d = Matrix<K>::fromColumns(1, minimal);
  FreeModule<K> target{ambient, {0}};
  int pd = 0;
  std::size_t lastRank = 1;
  while (d.cols() > 0) {
    ++pd;
    lastRank = d.cols();
    Matrix<K> next = syzygyMatrix(d, target, degrees);
    std::vector<int> nextDegrees;
    FreeModule<K> source{ambient, degrees};
    ModuleOrder so = source.order();
    for (std::size_t j = 0; j < next.cols(); ++j)
      nextDegrees.push_back(*vec::homogeneousDegree(next.column(j, so), so));
    target = source;
    degrees = std::move(nextDegrees);
    d = std::move(next);
  }

  RingFlags flags;
  flags.completeIntersection = mu == codim;
  flags.cohenMacaulay = pd == codim;
  flags.gorenstein = flags.cohenMacaulay && lastRank == 1;
  checkDeclared("complete_intersection", declared.completeIntersection, flags.completeIntersection);
  checkDeclared("gorenstein", declared.gorenstein, flags.gorenstein);
  checkDeclared("cohen_macaulay", declared.cohenMacaulay, flags.cohenMacaulay);
  if (flags.cohenMacaulay) {
    checkDeclared("equidimensional", declared.equidimensional, true);
    flags.equidimensional = true;
  } else {
    flags.equidimensional = declared.equidimensional.value_or(false);
  }

  return std::make_shared<const QuotientRing<K>>(variables, order, gens, gb, flags, dim);
}

template <class K>
RingPtr<K> makeRing(const std::vector<std::string>& variables, OrderKind order,
                    const std::vector<std::string>& idealText, const DeclaredFlags& declared) {
  checkVariables(variables);
  std::vector<Polynomial<K>> ideal;
  for (const auto& t : idealText) ideal.push_back(parseAmbient<K>(t, variables, order));
  return makeRing<K>(variables, order, ideal, declared);
}

template RingPtr<GF32003> makeRing<GF32003>(const std::vector<std::string>&, OrderKind,
                                            const std::vector<Polynomial<GF32003>>&, const DeclaredFlags&);
template RingPtr<Rational> makeRing<Rational>(const std::vector<std::string>&, OrderKind,
                                              const std::vector<Polynomial<Rational>>&, const DeclaredFlags&);
template RingPtr<GF32003> makeRing<GF32003>(const std::vector<std::string>&, OrderKind,
                                            const std::vector<std::string>&, const DeclaredFlags&);
template RingPtr<Rational> makeRing<Rational>(const std::vector<std::string>&, OrderKind,
                                              const std::vector<std::string>&, const DeclaredFlags&);

}  // namespace reflex
