#ifndef REFLEX_VEC_HPP
#define REFLEX_VEC_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflex/monomial.hpp"

namespace reflex {

template <class K>
struct Term {
  K coef;
  Monomial mono;
  std::uint32_t comp = 0;
};

/// Sparse element of a graded free module over the ambient polynomial ring.
/// Terms are kept strictly descending in a ModuleOrder with nonzero
/// coefficients. A polynomial is a Vec whose terms all sit in component 0.
template <class K>
class Vec {
public:
  Vec() = default;
  explicit Vec(std::vector<Term<K>> sortedTerms) : terms_(std::move(sortedTerms)) {}

  static Vec monomial(K c, Monomial m, std::uint32_t comp = 0) {
    Vec v;
    if (!c.isZero()) v.terms_.push_back({std::move(c), m, comp});
    return v;
  }
  static Vec constant(K c) { return monomial(std::move(c), Monomial()); }

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term<K>& lead() const { return terms_.front(); }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::vector<Term<K>>& mutableTerms() { return terms_; }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      const auto& s = a.terms_[i];
      const auto& t = b.terms_[i];
      if (s.comp != t.comp || !(s.mono == t.mono) || !(s.coef == t.coef)) return false;
    }
    return true;
  }

private:
  std::vector<Term<K>> terms_;
};

template <class K>
using Polynomial = Vec<K>;

namespace vec {

/// a + c * m * b, with b's terms optionally moved into component `comp`.
template <class K>
Vec<K> axpy(const Vec<K>& a, const K& c, const Monomial& m, const Vec<K>& b,
            const ModuleOrder& order, int comp = -1, std::size_t aStart = 0) {
  std::vector<Term<K>> out;
  const auto& at = a.terms();
  const auto& bt = b.terms();
  out.reserve(at.size() - aStart + bt.size());
  std::size_t i = aStart, j = 0;
  Term<K> scaled;
  bool haveScaled = false;
  auto loadB = [&]() {
    if (j < bt.size()) {
      scaled.coef = c * bt[j].coef;
      scaled.mono = m * bt[j].mono;
      scaled.comp = comp < 0 ? bt[j].comp : static_cast<std::uint32_t>(comp);
      haveScaled = true;
    } else {
      haveScaled = false;
    }
  };
  loadB();
  while (i < at.size() && haveScaled) {
    auto cmp = order(at[i].mono, at[i].comp, scaled.mono, scaled.comp);
    if (cmp > 0) {
      out.push_back(at[i++]);
    } else if (cmp < 0) {
      out.push_back(scaled);
      ++j;
      loadB();
    } else {
      K s = at[i].coef + scaled.coef;
      if (!s.isZero()) out.push_back({std::move(s), at[i].mono, at[i].comp});
      ++i;
      ++j;
      loadB();
    }
  }
  for (; i < at.size(); ++i) out.push_back(at[i]);
  while (haveScaled) {
    out.push_back(scaled);
    ++j;
    loadB();
  }
  return Vec<K>(std::move(out));
}

template <class K>
Vec<K> add(const Vec<K>& a, const Vec<K>& b, const ModuleOrder& order) {
  return axpy(a, K::one(), Monomial(), b, order);
}

template <class K>
Vec<K> sub(const Vec<K>& a, const Vec<K>& b, const ModuleOrder& order) {
  return axpy(a, -K::one(), Monomial(), b, order);
}

template <class K>
Vec<K> scale(const Vec<K>& a, const K& c) {
  if (c.isZero()) return {};
  std::vector<Term<K>> out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({c * t.coef, t.mono, t.comp});
  return Vec<K>(std::move(out));
}

/// c * m * a; order-preserving since module orders are multiplicative.
template <class K>
Vec<K> mulTerm(const Vec<K>& a, const K& c, const Monomial& m, int comp = -1) {
  if (c.isZero()) return {};
  std::vector<Term<K>> out;
  out.reserve(a.size());
  for (const auto& t : a)
    out.push_back({c * t.coef, m * t.mono, comp < 0 ? t.comp : static_cast<std::uint32_t>(comp)});
  return Vec<K>(std::move(out));
}

/// p * v for a polynomial p (component 0) and a module element v.
template <class K>
Vec<K> mulPoly(const Vec<K>& p, const Vec<K>& v, const ModuleOrder& order) {
  Vec<K> acc;
  for (const auto& t : p) acc = axpy(acc, t.coef, t.mono, v, order);
  return acc;
}

/// Moves every term of a polynomial into component `comp`.
template <class K>
Vec<K> inComponent(const Vec<K>& p, std::uint32_t comp) {
  std::vector<Term<K>> out(p.terms());
  for (auto& t : out) t.comp = comp;
  return Vec<K>(std::move(out));
}

/// Extracts component `comp` as a polynomial (component 0).
template <class K>
Vec<K> component(const Vec<K>& v, std::uint32_t comp) {
  std::vector<Term<K>> out;
  for (const auto& t : v)
    if (t.comp == comp) out.push_back({t.coef, t.mono, 0});
  return Vec<K>(std::move(out));
}

/// Re-sorts arbitrary terms into canonical form (combining duplicates).
template <class K>
Vec<K> canonicalize(std::vector<Term<K>> terms, const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term<K>& a, const Term<K>& b) {
    return order(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  std::vector<Term<K>> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.isZero()) out.pop_back();
    } else if (!t.coef.isZero()) {
      out.push_back(std::move(t));
    }
  }
  return Vec<K>(std::move(out));
}

template <class K>
Vec<K> makeMonic(const Vec<K>& a) {
  if (a.isZero() || a.lead().coef.isOne()) return a;
  return scale(a, a.lead().coef.inverse());
}

/// Common degree of all terms, or nullopt when inhomogeneous. Zero has no degree.
template <class K>
std::optional<int> homogeneousDegree(const Vec<K>& v, const ModuleOrder& order) {
  if (v.isZero()) return std::nullopt;
  int d = order.degree(v.lead().mono, v.lead().comp);
  for (const auto& t : v)
    if (order.degree(t.mono, t.comp) != d) return std::nullopt;
  return d;
}

template <class K>
bool isHomogeneous(const Vec<K>& v, const ModuleOrder& order) {
  return v.isZero() || homogeneousDegree(v, order).has_value();
}

/// Highest component index used plus one.
template <class K>
std::uint32_t maxComponent(const Vec<K>& v) {
  std::uint32_t m = 0;
  for (const auto& t : v) m = std::max(m, t.comp + 1);
  return m;
}

}  // namespace vec

/// Prints a polynomial in the scenario grammar, e.g. "x^2 - 3*y*z + 1".
template <class K>
std::string formatPolynomial(const Vec<K>& p, const std::vector<std::string>& names) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p) {
    std::string c = t.coef.toString();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.isOne()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.mono.toString(names);
    }
  }
  return out;
}

}  // namespace reflex

#endif  // REFLEX_VEC_HPP
