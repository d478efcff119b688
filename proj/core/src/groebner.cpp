#include "reflex/groebner.hpp"

#include <algorithm>
#include <climits>

#include "reflex/buchberger.hpp"
#include "reflex/errors.hpp"
#include "reflex/field.hpp"

namespace reflex {

namespace {

template <class K>
Vec<K> reduceBy(Vec<K> v, const std::vector<Vec<K>>& basis, const ModuleOrder& order) {
  std::vector<Term<K>> done;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const Term<K>& t = v.terms()[pos];
    const Vec<K>* red = nullptr;
    for (const auto& g : basis) {
      if (g.lead().comp == t.comp && g.lead().mono.divides(t.mono)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      done.push_back(t);
      ++pos;
      continue;
    }
    K c = -(t.coef / red->lead().coef);
    Monomial q = t.mono / red->lead().mono;
    v = vec::axpy(v, c, q, *red, order, -1, pos);
    pos = 0;
  }
  return Vec<K>(std::move(done));
}

template <class K>
void checkInAmbient(const Vec<K>& v, const FreeModule<K>& ambient) {
  for (const auto& t : v)
    if (static_cast<int>(t.comp) >= ambient.rank())
      throw RingMismatch("vector has a component outside the ambient free module");
}

template <class K>
int degreeOf(const Vec<K>& v, const ModuleOrder& order) {
  auto d = vec::homogeneousDegree(v, order);
  if (!d) throw InvalidArgument("inhomogeneous element");
  return *d;
}

}  // namespace

template <class K>
int FreeModule<K>::maxTwist() const {
  return twists.empty() ? 0 : *std::max_element(twists.begin(), twists.end());
}

template <class K>
int FreeModule<K>::minTwist() const {
  return twists.empty() ? 0 : *std::min_element(twists.begin(), twists.end());
}

template <class K>
Vec<K> GroebnerBasis<K>::normalForm(const Vec<K>& v) const {
  checkInAmbient(v, ambient_);
  return reduceBy(v, elements_, order_);
}

template <class K>
bool GroebnerBasis<K>::verify() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const auto& a = elements_[i];
      const auto& b = elements_[j];
      if (a.lead().comp != b.lead().comp) continue;
      Monomial l = lcm(a.lead().mono, b.lead().mono);
      Vec<K> s = vec::axpy(vec::mulTerm(a, b.lead().coef, l / a.lead().mono), -a.lead().coef,
                           l / b.lead().mono, b, order_);
      if (!reduceBy(s, elements_, order_).isZero()) return false;
    }
  }
  return true;
}

template <class K>
std::string GroebnerBasis<K>::certificate() const {
  const auto& names = ambient_.ring->variables();
  auto fmt = [&](const Vec<K>& v) {
    std::string out = "(";
    for (int k = 0; k < ambient_.rank(); ++k) {
      if (k) out += ", ";
      out += formatPolynomial(vec::component(v, static_cast<std::uint32_t>(k)), names);
    }
    return out + ")";
  };
  std::string out = "groebner basis over " + ambient_.ring->describe() + ", rank " +
                    std::to_string(ambient_.rank()) + ", " + std::to_string(elements_.size()) +
                    " elements\n";
  for (std::size_t i = 0; i < elements_.size(); ++i)
    out += "  g" + std::to_string(i) + " = " + fmt(elements_[i]) + "\n";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const auto& a = elements_[i];
      const auto& b = elements_[j];
      if (a.lead().comp != b.lead().comp) continue;
      Monomial l = lcm(a.lead().mono, b.lead().mono);
      Vec<K> s = vec::axpy(vec::mulTerm(a, b.lead().coef, l / a.lead().mono), -a.lead().coef,
                           l / b.lead().mono, b, order_);
      bool zero = reduceBy(s, elements_, order_).isZero();
      out += "  S(g" + std::to_string(i) + ", g" + std::to_string(j) + ") -> " +
             (zero ? "0" : "NONZERO") + "\n";
    }
  }
  return out;
}

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Vec<K>>& gens, const FreeModule<K>& ambient) {
  ModuleOrder order = ambient.order();
  BuchbergerEngine<K> engine(order, ambient.ring->definingGb());
  for (const auto& g : gens) {
    checkInAmbient(g, ambient);
    if (g.isZero()) continue;
    engine.addInput(g, degreeOf(g, order));
  }
  engine.run();
  return GroebnerBasis<K>(ambient, engine.reducedBasis());
}

template <class K>
std::vector<Vec<K>> syzygies(const std::vector<Vec<K>>& gens, const std::vector<int>& degrees,
                             const FreeModule<K>& ambient) {
  if (gens.size() != degrees.size()) throw InvalidArgument("one degree per generator required");
  ModuleOrder order = ambient.order();
  BuchbergerEngine<K> engine(order, ambient.ring->definingGb(), {.track = true});
  for (std::size_t j = 0; j < gens.size(); ++j) {
    checkInAmbient(gens[j], ambient);
    engine.addInput(gens[j], degrees[j]);
  }
  engine.run();
  return engine.syzygies();
}

template <class K>
std::vector<std::size_t> minimalGeneratorIndices(const std::vector<Vec<K>>& gens,
                                                 const std::vector<int>& degrees,
                                                 const FreeModule<K>& ambient) {
  if (gens.size() != degrees.size()) throw InvalidArgument("one degree per generator required");
  BuchbergerEngine<K> engine(ambient.order(), ambient.ring->definingGb());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    checkInAmbient(gens[j], ambient);
    engine.addInput(gens[j], degrees[j]);
  }
  engine.run();
  return engine.minimalInputs();
}

template <class K>
Matrix<K> syzygyMatrix(const Matrix<K>& m, const FreeModule<K>& target,
                       const std::vector<int>& degrees) {
  if (m.rows() != static_cast<std::size_t>(target.rank()) || m.cols() != degrees.size())
    throw InvalidArgument("matrix shape does not match its free modules");
  auto syz = syzygies(m.columns(target.order()), degrees, target);
  FreeModule<K> source{target.ring, degrees};
  ModuleOrder so = source.order();
  std::vector<int> syzDegrees;
  syzDegrees.reserve(syz.size());
  for (const auto& s : syz) syzDegrees.push_back(degreeOf(s, so));
  auto keep = minimalGeneratorIndices(syz, syzDegrees, source);
  std::vector<Vec<K>> cols;
  cols.reserve(keep.size());
  for (auto k : keep) cols.push_back(syz[k]);
  return Matrix<K>::fromColumns(m.cols(), cols);
}

template <class K>
Ideal<K> Ideal<K>::parse(const RingPtr<K>& ring, const std::vector<std::string>& texts) {
  Ideal<K> out{ring, {}};
  for (const auto& t : texts) out.gens.push_back(ring->parse(t));
  for (const auto& g : out.gens)
    if (!vec::isHomogeneous(g, ring->polyOrder()))
      throw InvalidArgument("ideal generator is not homogeneous: " + ring->format(g));
  return out;
}

template <class K>
std::string Ideal<K>::toString() const {
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += ring->format(gens[i]);
  }
  return out + ")";
}

template <class K>
GroebnerBasis<K> idealGroebnerBasis(const Ideal<K>& ideal) {
  return buchberger(ideal.gens, FreeModule<K>{ideal.ring, {0}});
}

template <class K>
Ideal<K> minimalize(const Ideal<K>& ideal) {
  const ModuleOrder& po = ideal.ring->polyOrder();
  std::vector<Vec<K>> gens;
  std::vector<int> degrees;
  for (const auto& g : ideal.gens) {
    Polynomial<K> r = ideal.ring->reduce(g);
    if (r.isZero()) continue;
    degrees.push_back(degreeOf(r, po));
    gens.push_back(vec::makeMonic(r));
  }
  auto keep = minimalGeneratorIndices(gens, degrees, FreeModule<K>{ideal.ring, {0}});
  Ideal<K> out{ideal.ring, {}};
  for (auto k : keep) out.gens.push_back(gens[k]);
  return out;
}

template <class K>
bool isMember(const Polynomial<K>& f, const Ideal<K>& ideal) {
  const ModuleOrder& po = ideal.ring->polyOrder();
  Polynomial<K> r = ideal.ring->reduce(f);
  if (r.isZero()) return true;
  auto gb = idealGroebnerBasis(ideal);
  // inhomogeneous f: every homogeneous component must be a member
  std::vector<Term<K>> terms(r.terms());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term<K>& a, const Term<K>& b) { return a.mono.degree() > b.mono.degree(); });
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    std::vector<Term<K>> part;
    while (j < terms.size() && terms[j].mono.degree() == terms[i].mono.degree()) part.push_back(terms[j++]);
    if (!gb.contains(vec::canonicalize(std::move(part), po))) return false;
    i = j;
  }
  return true;
}

template <class K>
bool isSubset(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring != b.ring) throw RingMismatch("ideals over different rings");
  auto gb = idealGroebnerBasis(b);
  for (const auto& g : a.gens)
    if (!gb.contains(a.ring->reduce(g))) return false;
  return true;
}

template <class K>
bool isZeroIdeal(const Ideal<K>& ideal) {
  for (const auto& g : ideal.gens)
    if (!ideal.ring->reduce(g).isZero()) return false;
  return true;
}

template <class K>
bool isUnitIdeal(const Ideal<K>& ideal) {
  return isMember(Polynomial<K>::constant(K::one()), ideal);
}

template <class K>
Ideal<K> idealSum(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring != b.ring) throw RingMismatch("ideals over different rings");
  Ideal<K> out{a.ring, a.gens};
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return minimalize(out);
}

template <class K>
Ideal<K> idealProduct(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring != b.ring) throw RingMismatch("ideals over different rings");
  Ideal<K> out{a.ring, {}};
  for (const auto& f : a.gens)
    for (const auto& g : b.gens) out.gens.push_back(a.ring->mul(f, g));
  return minimalize(out);
}

template <class K>
Ideal<K> submoduleColon(const std::vector<Vec<K>>& gens, const Vec<K>& v,
                        const FreeModule<K>& ambient) {
  const RingPtr<K>& ring = ambient.ring;
  ModuleOrder order = ambient.order();
  checkInAmbient(v, ambient);
  Vec<K> vr = reduceModIdeal(v, ring->definingGb(), order);
  if (vr.isZero()) return Ideal<K>::unit(ring);
  int dv = degreeOf(vr, order);
  std::vector<Vec<K>> all{vr};
  std::vector<int> degrees{dv};
  for (const auto& g : gens) {
    Vec<K> gr = reduceModIdeal(g, ring->definingGb(), order);
    if (gr.isZero()) continue;
    degrees.push_back(degreeOf(gr, order));
    all.push_back(std::move(gr));
  }
  auto syz = syzygies(all, degrees, ambient);
  Ideal<K> out{ring, {}};
  for (const auto& s : syz) {
    Polynomial<K> c = vec::component(s, 0);
    if (!c.isZero()) out.gens.push_back(c);
  }
  return minimalize(out);
}

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring != b.ring) throw RingMismatch("ideals over different rings");
  FreeModule<K> amb{a.ring, {0, 0}};
  std::vector<Vec<K>> gens;
  for (const auto& f : a.gens) gens.push_back(vec::inComponent(f, 0));
  for (const auto& g : b.gens) gens.push_back(vec::inComponent(g, 1));
  ModuleOrder order = amb.order();
  Vec<K> diag = vec::canonicalize<K>({{K::one(), Monomial(), 0}, {K::one(), Monomial(), 1}}, order);
  return submoduleColon(gens, diag, amb);
}

template <class K>
Ideal<K> colon(const Ideal<K>& a, const Ideal<K>& b) {
  if (a.ring != b.ring) throw RingMismatch("ideals over different rings");
  const ModuleOrder& po = a.ring->polyOrder();
  std::vector<Polynomial<K>> bs;
  std::vector<int> twists;
  for (const auto& g : b.gens) {
    Polynomial<K> r = a.ring->reduce(g);
    if (r.isZero()) continue;
    twists.push_back(-degreeOf(r, po));
    bs.push_back(std::move(r));
  }
  if (bs.empty()) return Ideal<K>::unit(a.ring);
  // r * (b_1, ..., b_m) ∈ a R^m, with twists making the stacked vector degree 0
  FreeModule<K> amb{a.ring, twists};
  ModuleOrder order = amb.order();
  std::vector<Term<K>> terms;
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (const auto& t : bs[i]) terms.push_back({t.coef, t.mono, static_cast<std::uint32_t>(i)});
    for (const auto& f : a.gens) gens.push_back(vec::inComponent(f, static_cast<std::uint32_t>(i)));
  }
  return submoduleColon(gens, vec::canonicalize(std::move(terms), order), amb);
}

template <class K>
Ideal<K> annihilatorOfCokernel(const Matrix<K>& presentation, const FreeModule<K>& target,
                               const std::vector<int>& sourceTwists) {
  (void)sourceTwists;
  if (target.rank() == 0) return Ideal<K>::unit(target.ring);
  ModuleOrder order = target.order();
  auto cols = presentation.columns(order);
  Ideal<K> acc{target.ring, {}};
  for (int i = 0; i < target.rank(); ++i) {
    Vec<K> e = Vec<K>::monomial(K::one(), Monomial(), static_cast<std::uint32_t>(i));
    Ideal<K> c = submoduleColon(cols, e, target);
    acc = i == 0 ? c : intersect(acc, c);
  }
  return acc;
}

#define REFLEX_INSTANTIATE_GROEBNER(K)                                                            \
  template struct FreeModule<K>;                                                                   \
  template class GroebnerBasis<K>;                                                                 \
  template struct Ideal<K>;                                                                        \
  template GroebnerBasis<K> buchberger(const std::vector<Vec<K>>&, const FreeModule<K>&);          \
  template std::vector<Vec<K>> syzygies(const std::vector<Vec<K>>&, const std::vector<int>&,       \
                                        const FreeModule<K>&);                                     \
  template Matrix<K> syzygyMatrix(const Matrix<K>&, const FreeModule<K>&, const std::vector<int>&); \
  template std::vector<std::size_t> minimalGeneratorIndices(                                       \
      const std::vector<Vec<K>>&, const std::vector<int>&, const FreeModule<K>&);                  \
  template GroebnerBasis<K> idealGroebnerBasis(const Ideal<K>&);                                   \
  template Ideal<K> minimalize(const Ideal<K>&);                                                   \
  template bool isMember(const Polynomial<K>&, const Ideal<K>&);                                   \
  template bool isSubset(const Ideal<K>&, const Ideal<K>&);                                        \
  template bool isZeroIdeal(const Ideal<K>&);                                                      \
  template bool isUnitIdeal(const Ideal<K>&);                                                      \
  template Ideal<K> idealSum(const Ideal<K>&, const Ideal<K>&);                                    \
  template Ideal<K> idealProduct(const Ideal<K>&, const Ideal<K>&);                                \
  template Ideal<K> intersect(const Ideal<K>&, const Ideal<K>&);                                   \
  template Ideal<K> colon(const Ideal<K>&, const Ideal<K>&);                                       \
  template Ideal<K> submoduleColon(const std::vector<Vec<K>>&, const Vec<K>&,                      \
                                   const FreeModule<K>&);                                          \
  template Ideal<K> annihilatorOfCokernel(const Matrix<K>&, const FreeModule<K>&,                  \
                                          const std::vector<int>&);

REFLEX_INSTANTIATE_GROEBNER(GF32003)
REFLEX_INSTANTIATE_GROEBNER(Rational)

}  // namespace reflex
