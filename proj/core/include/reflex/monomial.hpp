#ifndef REFLEX_MONOMIAL_HPP
#define REFLEX_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "reflex/errors.hpp"

namespace reflex {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 255;

/// Exponent vector over at most kMaxVars variables, with cached total degree.
/// Unused trailing slots are always zero, so comparisons may scan all slots.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(const std::vector<int>& exps);

  static Monomial variable(int index);

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

  /// Support bitmask (bit i set iff variable i occurs).
  std::uint32_t support() const {
    std::uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exps_[i] != 0) m |= 1u << i;
    return m;
  }

  std::string toString(const std::vector<std::string>& names) const;

private:
  friend std::strong_ordering compareLex(const Monomial&, const Monomial&);
  friend std::strong_ordering compareGrevlex(const Monomial&, const Monomial&);

  std::array<std::uint8_t, kMaxVars> exps_{};
  int degree_ = 0;
};

enum class OrderKind { Grevlex, Lex };

std::string toString(OrderKind kind);
OrderKind parseOrderKind(const std::string& text);

std::strong_ordering compareLex(const Monomial& a, const Monomial& b);
std::strong_ordering compareGrevlex(const Monomial& a, const Monomial& b);

inline std::strong_ordering compare(OrderKind kind, const Monomial& a, const Monomial& b) {
  return kind == OrderKind::Grevlex ? compareGrevlex(a, b) : compareLex(a, b);
}

/// Term-over-position order on a graded free module. Terms compare first by
/// total degree (monomial degree plus generator twist), then by the monomial
/// order, then by position with lower generator index taken as larger.
class ModuleOrder {
public:
  ModuleOrder() = default;
  ModuleOrder(OrderKind kind, std::vector<int> twists)
      : kind_(kind), twists_(std::move(twists)) {}

  OrderKind kind() const { return kind_; }
  const std::vector<int>& twists() const { return twists_; }
  int rank() const { return static_cast<int>(twists_.size()); }
  int degree(const Monomial& m, std::uint32_t comp) const {
    return m.degree() + twists_[comp];
  }

  std::strong_ordering operator()(const Monomial& a, std::uint32_t ca,
                                  const Monomial& b, std::uint32_t cb) const {
    int da = degree(a, ca), db = degree(b, cb);
    if (da != db) return da <=> db;
    auto c = compare(kind_, a, b);
    if (c != 0) return c;
    return cb <=> ca;
  }

private:
  OrderKind kind_ = OrderKind::Grevlex;
  std::vector<int> twists_;
};

}  // namespace reflex

#endif  // REFLEX_MONOMIAL_HPP
