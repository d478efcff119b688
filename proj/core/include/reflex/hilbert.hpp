#ifndef REFLEX_HILBERT_HPP
#define REFLEX_HILBERT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "reflex/monomial.hpp"

namespace reflex {

/// Integer polynomial in t, possibly with negative exponents:
/// sum_i coeffs[i] * t^(shift + i).
struct LaurentPoly {
  std::vector<std::int64_t> coeffs;
  int shift = 0;

  bool isZero() const;
  std::int64_t at(int exponent) const;
  void trim();
  std::string toString() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
};

/// Numerator K(t) with HS(S/J) = K(t)/(1-t)^n for the monomial ideal J of
/// S = k[x_1..x_n]. Pivot recursion K(J) = K(J + (x)) + t K(J : x).
LaurentPoly monomialIdealNumerator(std::vector<Monomial> gens);

/// Hilbert series numerator/(1-t)^n.
struct HilbertSeries {
  LaurentPoly numerator;
  int nvars = 0;

  /// Pole order at t = 1; -1 for the zero series.
  int dimension() const;
  /// h(t) with numerator = h(t) (1-t)^(n - dim).
  LaurentPoly reducedNumerator() const;
  /// h(1); zero for the zero series.
  std::int64_t multiplicity() const;
  std::int64_t value(int degree) const;
  /// Lowest degree with a possibly nonzero value.
  int initialDegree() const { return numerator.shift; }
  std::string toString() const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
};

/// Values of a Hilbert function on the degree range [low, high].
struct HilbertFunction {
  int low = 0;
  std::vector<std::int64_t> values;

  int high() const { return low + static_cast<int>(values.size()) - 1; }
  std::int64_t at(int degree) const;

  static HilbertFunction fromSeries(const HilbertSeries& hs, int low, int high);
  std::string toString() const;

  friend bool operator==(const HilbertFunction& a, const HilbertFunction& b) {
    return a.low == b.low && a.values == b.values;
  }
};

}  // namespace reflex

#endif  // REFLEX_HILBERT_HPP
