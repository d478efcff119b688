#include "reflex/hilbert.hpp"

#include <algorithm>

namespace reflex {

bool LaurentPoly::isZero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t LaurentPoly::at(int exponent) const {
  int i = exponent - shift;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(i)];
}

void LaurentPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size()) {
    coeffs.clear();
    shift = 0;
    return;
  }
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  shift += static_cast<int>(lead);
}

std::string LaurentPoly::toString() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t c = coeffs[i];
    if (c == 0) continue;
    int e = shift + static_cast<int>(i);
    std::int64_t a = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, std::int64_t sign) {
  if (a.coeffs.empty()) {
    LaurentPoly r = b;
    for (auto& c : r.coeffs) c *= sign;
    return r;
  }
  if (b.coeffs.empty()) return a;
  int lo = std::min(a.shift, b.shift);
  int hi = std::max(a.shift + static_cast<int>(a.coeffs.size()), b.shift + static_cast<int>(b.coeffs.size()));
  LaurentPoly r;
  r.shift = lo;
  r.coeffs.assign(static_cast<std::size_t>(hi - lo), 0);
  for (int e = lo; e < hi; ++e) r.coeffs[static_cast<std::size_t>(e - lo)] = a.at(e) + sign * b.at(e);
  r.trim();
  return r;
}

LaurentPoly monomialPoly(std::int64_t c, int e) {
  LaurentPoly p;
  p.coeffs = {c};
  p.shift = e;
  return p;
}

// Removes generators divisible by another generator (first occurrence wins).
std::vector<Monomial> minimalMonomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, 1); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, -1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  LaurentPoly r;
  r.shift = a.shift + b.shift;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly d = a - b;
  return d.isZero();
}

LaurentPoly monomialIdealNumerator(std::vector<Monomial> gens) {
  gens = minimalMonomials(std::move(gens));
  if (gens.empty()) return monomialPoly(1, 0);
  if (gens.front().isOne()) return {};

  // pick the variable occurring in the most generators
  int best = -1;
  int bestCount = 1;
  for (int v = 0; v < kMaxVars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++count;
    if (count > bestCount) {
      best = v;
      bestCount = count;
    }
  }
  if (best < 0) {
    // pairwise coprime generators: product of (1 - t^deg)
    LaurentPoly acc = monomialPoly(1, 0);
    for (const auto& g : gens) acc = acc * (monomialPoly(1, 0) - monomialPoly(1, g.degree()));
    return acc;
  }

  Monomial x = Monomial::variable(best);
  std::vector<Monomial> sum{x};
  std::vector<Monomial> quotient;
  for (const auto& g : gens) {
    if (g[best] == 0) sum.push_back(g);
    quotient.push_back(g[best] > 0 ? g / x : g);
  }
  return monomialIdealNumerator(std::move(sum)) +
         monomialPoly(1, 1) * monomialIdealNumerator(std::move(quotient));
}

int HilbertSeries::dimension() const {
  if (numerator.isZero()) return -1;
  LaurentPoly h = numerator;
  int d = nvars;
  // divide by (1 - t) while the value at 1 vanishes
  while (d > 0) {
    std::int64_t sum = 0;
    for (auto c : h.coeffs) sum += c;
    if (sum != 0) break;
    LaurentPoly q;
    q.shift = h.shift;
    q.coeffs.assign(h.coeffs.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < h.coeffs.size(); ++i) {
      run += h.coeffs[i];
      q.coeffs[i] = run;
    }
    q.trim();
    h = q;
    --d;
  }
  return d;
}

LaurentPoly HilbertSeries::reducedNumerator() const {
  if (numerator.isZero()) return {};
  LaurentPoly h = numerator;
  for (int d = nvars; d > dimension(); --d) {
    LaurentPoly q;
    q.shift = h.shift;
    q.coeffs.assign(h.coeffs.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < h.coeffs.size(); ++i) {
      run += h.coeffs[i];
      q.coeffs[i] = run;
    }
    q.trim();
    h = q;
  }
  return h;
}

std::int64_t HilbertSeries::multiplicity() const {
  std::int64_t sum = 0;
  for (auto c : reducedNumerator().coeffs) sum += c;
  return sum;
}

std::int64_t HilbertSeries::value(int degree) const {
  // coefficient of t^m in 1/(1-t)^n is C(m + n - 1, n - 1)
  auto binom = [](int top, int k) -> std::int64_t {
    if (k < 0 || top < k) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
  };
  std::int64_t total = 0;
  for (std::size_t i = 0; i < numerator.coeffs.size(); ++i) {
    int m = degree - numerator.shift - static_cast<int>(i);
    if (m < 0) continue;
    std::int64_t c = nvars == 0 ? (m == 0 ? 1 : 0) : binom(m + nvars - 1, nvars - 1);
    total += numerator.coeffs[i] * c;
  }
  return total;
}

std::string HilbertSeries::toString() const {
  int d = dimension();
  if (d < 0) return "0";
  std::string num = reducedNumerator().toString();
  if (d == 0) return num;
  return "(" + num + ")/(1 - t)" + (d == 1 ? std::string() : "^" + std::to_string(d));
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  return HilbertSeries{a.numerator + b.numerator, std::max(a.nvars, b.nvars)};
}

std::int64_t HilbertFunction::at(int degree) const {
  int i = degree - low;
  if (i < 0 || i >= static_cast<int>(values.size())) return 0;
  return values[static_cast<std::size_t>(i)];
}

HilbertFunction HilbertFunction::fromSeries(const HilbertSeries& hs, int low, int high) {
  HilbertFunction hf;
  hf.low = low;
  for (int d = low; d <= high; ++d) hf.values.push_back(hs.value(d));
  return hf;
}

std::string HilbertFunction::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(low + static_cast<int>(i)) + ": " + std::to_string(values[i]);
  }
  return out + "}";
}

}  // namespace reflex
