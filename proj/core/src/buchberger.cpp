#include "reflex/buchberger.hpp"

#include <algorithm>

#include "reflex/errors.hpp"
#include "reflex/field.hpp"

namespace reflex {

template <class K>
Vec<K> reduceModIdeal(const Vec<K>& v, const std::vector<Vec<K>>& ringGb,
                      const ModuleOrder& order) {
  if (ringGb.empty() || v.isZero()) return v;
  std::vector<Term<K>> done;
  Vec<K> f = v;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term<K>& t = f.terms()[pos];
    const Vec<K>* red = nullptr;
    for (const auto& g : ringGb) {
      if (g.lead().mono.divides(t.mono)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      done.push_back(t);
      ++pos;
      continue;
    }
    K c = -t.coef;
    Monomial q = t.mono / red->lead().mono;
    std::uint32_t comp = t.comp;
    f = vec::axpy(f, c, q, *red, order, static_cast<int>(comp), pos);
    pos = 0;
  }
  return Vec<K>(std::move(done));
}

template <class K>
BuchbergerEngine<K>::BuchbergerEngine(ModuleOrder order, std::vector<Vec<K>> ringGb,
                                      Options options)
    : order_(std::move(order)), ringGb_(std::move(ringGb)), options_(options) {
  for (auto& g : ringGb_) g = vec::makeMonic(g);
  byComp_.resize(static_cast<std::size_t>(order_.rank()));
}

template <class K>
void BuchbergerEngine<K>::addInput(Vec<K> v, int degree) {
  if (seeded_) throw InvalidArgument("inputs must be added before run()");
  for (const auto& t : v)
    if (static_cast<int>(t.comp) >= order_.rank())
      throw InvalidArgument("input component outside the ambient free module");
  if (!v.isZero()) {
    auto d = vec::homogeneousDegree(v, order_);
    if (!d) throw InvalidArgument("inhomogeneous input to Buchberger");
    if (*d != degree) throw InvalidArgument("input degree does not match its terms");
  }
  inputs_.push_back(std::move(v));
  inputDegrees_.push_back(degree);
  inputDone_.push_back(false);
  inputMinimal_.push_back(false);
}

template <class K>
ModuleOrder BuchbergerEngine<K>::repOrder() const {
  return ModuleOrder(order_.kind(), inputDegrees_);
}

template <class K>
bool BuchbergerEngine<K>::pairLess(const Pair& a, const Pair& b) const {
  if (a.degree != b.degree) return a.degree < b.degree;
  auto c = order_(a.lcm, a.comp, b.lcm, b.comp);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

template <class K>
int BuchbergerEngine<K>::findReducer(const Monomial& m, std::uint32_t comp) const {
  for (std::size_t idx : byComp_[comp])
    if (elements_[idx].lm.divides(m)) return static_cast<int>(idx);
  return -1;
}

template <class K>
void BuchbergerEngine<K>::reduce(Vec<K>& v, Vec<K>* rep) const {
  std::vector<Term<K>> done;
  const ModuleOrder ro = rep != nullptr ? repOrder() : ModuleOrder();
  std::size_t pos = 0;
  while (pos < v.size()) {
    const Term<K>& t = v.terms()[pos];
    int r = findReducer(t.mono, t.comp);
    if (r < 0) {
      done.push_back(t);
      ++pos;
      continue;
    }
    const Element& e = elements_[static_cast<std::size_t>(r)];
    K c = -t.coef;
    Monomial q = t.mono / e.lm;
    if (rep != nullptr && !e.rep.isZero()) *rep = vec::axpy(*rep, c, q, e.rep, ro);
    v = vec::axpy(v, c, q, e.v, order_, -1, pos);
    pos = 0;
  }
  v = Vec<K>(std::move(done));
}

template <class K>
void BuchbergerEngine<K>::recordSyzygy(Vec<K> rep) {
  rep = reduceModIdeal(rep, ringGb_, repOrder());
  if (!rep.isZero()) syzygies_.push_back(std::move(rep));
}

template <class K>
void BuchbergerEngine<K>::insert(Vec<K> v, Vec<K> rep, bool seeded, bool updatePairs) {
  K inv = v.lead().coef.inverse();
  if (!v.lead().coef.isOne()) {
    v = vec::scale(v, inv);
    rep = vec::scale(rep, inv);
  }
  if (options_.track && !rep.isZero()) rep = reduceModIdeal(rep, ringGb_, repOrder());
  Element e;
  e.lm = v.lead().mono;
  e.comp = v.lead().comp;
  e.degree = order_.degree(e.lm, e.comp);
  e.seeded = seeded;
  e.v = std::move(v);
  e.rep = std::move(rep);
  std::size_t idx = elements_.size();
  elements_.push_back(std::move(e));
  if (updatePairs) update(idx);
  byComp_[elements_[idx].comp].push_back(idx);
}

template <class K>
void BuchbergerEngine<K>::update(std::size_t t) {
  const Element& h = elements_[t];
  const bool productCriterion = !options_.track && order_.rank() == 1;
  struct Cand {
    std::size_t i;
    Monomial lcm;
    bool disjoint;
  };
  std::vector<Cand> cands;
  for (std::size_t i : byComp_[h.comp]) {
    const Element& g = elements_[i];
    cands.push_back({i, lcm(g.lm, h.lm), productCriterion && coprime(g.lm, h.lm)});
  }
  std::vector<Cand> kept;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    const Cand& c1 = cands[a];
    bool keep = c1.disjoint;
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
        if (cands[b].lcm.divides(c1.lcm)) keep = false;
      for (std::size_t b = 0; b < kept.size() && keep; ++b)
        if (kept[b].lcm.divides(c1.lcm)) keep = false;
    }
    if (keep) kept.push_back(c1);
  }
  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.comp != h.comp || !h.lm.divides(p.lcm)) return false;
    return !(lcm(elements_[p.i].lm, h.lm) == p.lcm) && !(lcm(elements_[p.j].lm, h.lm) == p.lcm);
  });
  for (const Cand& c : kept) {
    if (c.disjoint) continue;
    pairs_.push_back({c.i, t, c.lcm, h.comp, order_.degree(c.lcm, h.comp)});
  }
}

template <class K>
void BuchbergerEngine<K>::run(int maxDegree) {
  if (!seeded_) {
    seeded_ = true;
    for (int k = 0; k < order_.rank(); ++k)
      for (const auto& g : ringGb_)
        insert(vec::inComponent(g, static_cast<std::uint32_t>(k)), {}, true, false);
    for (std::size_t j = 0; j < inputs_.size(); ++j) {
      if (!inputs_[j].isZero()) continue;
      inputDone_[j] = true;
      if (options_.track) recordSyzygy(Vec<K>::monomial(K::one(), Monomial(), static_cast<std::uint32_t>(j)));
    }
  }
  const ModuleOrder ro = repOrder();
  std::vector<std::size_t> pending;
  for (std::size_t j = 0; j < inputs_.size(); ++j)
    if (!inputDone_[j]) pending.push_back(j);
  std::stable_sort(pending.begin(), pending.end(), [&](std::size_t a, std::size_t b) {
    return inputDegrees_[a] < inputDegrees_[b];
  });
  std::size_t next = 0;

  while (true) {
    int d = INT_MAX;
    for (const auto& p : pairs_) d = std::min(d, p.degree);
    if (next < pending.size()) d = std::min(d, inputDegrees_[pending[next]]);
    if (d == INT_MAX || d > maxDegree) break;

    std::vector<Pair> batch;
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.degree != d) return false;
      batch.push_back(p);
      return true;
    });
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) { return pairLess(a, b); });
    for (const Pair& p : batch) {
      const Element& a = elements_[p.i];
      const Element& b = elements_[p.j];
      Monomial qa = p.lcm / a.lm;
      Monomial qb = p.lcm / b.lm;
      Vec<K> s = vec::axpy(vec::mulTerm(a.v, K::one(), qa), -K::one(), qb, b.v, order_);
      Vec<K> rep;
      if (options_.track)
        rep = vec::axpy(vec::mulTerm(a.rep, K::one(), qa), -K::one(), qb, b.rep, ro);
      reduce(s, options_.track ? &rep : nullptr);
      ++pairsReduced_;
      if (s.isZero()) {
        if (options_.track) recordSyzygy(std::move(rep));
      } else {
        insert(std::move(s), std::move(rep), false, true);
      }
    }

    while (next < pending.size() && inputDegrees_[pending[next]] == d) {
      std::size_t j = pending[next++];
      inputDone_[j] = true;
      Vec<K> v = inputs_[j];
      Vec<K> rep;
      if (options_.track) rep = Vec<K>::monomial(K::one(), Monomial(), static_cast<std::uint32_t>(j));
      reduce(v, options_.track ? &rep : nullptr);
      if (v.isZero()) {
        if (options_.track) recordSyzygy(std::move(rep));
      } else {
        inputMinimal_[j] = true;
        insert(std::move(v), std::move(rep), false, true);
      }
    }
  }
}

template <class K>
std::vector<std::size_t> BuchbergerEngine<K>::minimalInputs() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < inputMinimal_.size(); ++j)
    if (inputMinimal_[j]) out.push_back(j);
  return out;
}

template <class K>
std::vector<Vec<K>> BuchbergerEngine<K>::basis() const {
  std::vector<Vec<K>> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.v);
  return out;
}

template <class K>
std::vector<Vec<K>> BuchbergerEngine<K>::reducedBasis() const {
  std::vector<Vec<K>> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Element& e = elements_[i];
    bool redundant = false;
    for (std::size_t j : byComp_[e.comp]) {
      if (j == i) continue;
      const Element& o = elements_[j];
      if (o.lm.divides(e.lm) && (!(o.lm == e.lm) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    std::vector<Term<K>> tail(e.v.terms().begin() + 1, e.v.terms().end());
    Vec<K> rest = normalForm(Vec<K>(std::move(tail)));
    std::vector<Term<K>> terms;
    terms.push_back(e.v.lead());
    terms.insert(terms.end(), rest.terms().begin(), rest.terms().end());
    out.push_back(Vec<K>(std::move(terms)));
  }
  return out;
}

template <class K>
Vec<K> BuchbergerEngine<K>::normalForm(const Vec<K>& v) const {
  for (const auto& t : v)
    if (static_cast<int>(t.comp) >= order_.rank())
      throw RingMismatch("vector does not live in the ambient free module");
  Vec<K> r = v;
  reduce(r, nullptr);
  return r;
}

template <class K>
bool BuchbergerEngine<K>::reducesToZero(const Vec<K>& v) const {
  return normalForm(v).isZero();
}

template <class K>
std::vector<std::pair<Monomial, std::uint32_t>> BuchbergerEngine<K>::leadTerms() const {
  std::vector<std::pair<Monomial, std::uint32_t>> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.emplace_back(e.lm, e.comp);
  return out;
}

template Vec<GF32003> reduceModIdeal(const Vec<GF32003>&, const std::vector<Vec<GF32003>>&,
                                     const ModuleOrder&);
template Vec<Rational> reduceModIdeal(const Vec<Rational>&, const std::vector<Vec<Rational>>&,
                                      const ModuleOrder&);
template class BuchbergerEngine<GF32003>;
template class BuchbergerEngine<Rational>;

}  // namespace reflex
