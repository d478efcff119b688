#ifndef REFLEX_FIELD_HPP
#define REFLEX_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "reflex/errors.hpp"

namespace reflex {

/// Element of the prime field Z/P. P must be an odd prime below 2^31.
template <std::uint32_t P>
class ModP {
  static_assert(P > 2 && P < (1u << 31), "modulus out of range");

public:
  static constexpr std::uint32_t kModulus = P;

  constexpr ModP() = default;
  constexpr ModP(std::int64_t x) : v_(reduce(x)) {}  // NOLINT(google-explicit-constructor)

  static constexpr ModP zero() { return ModP(); }
  static constexpr ModP one() { return ModP(1); }
  static std::string name() { return "gf" + std::to_string(P); }

  /// Parses a (possibly very long) nonnegative decimal integer.
  static ModP fromDecimal(std::string_view digits) {
    std::uint64_t acc = 0;
    for (char c : digits) acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % P;
    return ModP(static_cast<std::int64_t>(acc));
  }

  constexpr bool isZero() const { return v_ == 0; }
  constexpr bool isOne() const { return v_ == 1; }
  constexpr std::uint32_t raw() const { return v_; }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= P) s -= P;
    return fromRaw(s);
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return fromRaw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_);
  }
  friend constexpr ModP operator*(ModP a, ModP b) {
    return fromRaw(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.v_) * b.v_ % P));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  constexpr ModP operator-() const { return fromRaw(v_ == 0 ? 0 : P - v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }

  friend constexpr bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw DomainError("division by zero in " + name());
    // extended Euclid on (v, P)
    std::int64_t t = 0, newt = 1, r = P, newr = v_;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    return ModP(t);
  }

  /// Symmetric representative in (-P/2, P/2].
  std::string toString() const {
    std::int64_t s = v_;
    if (s > static_cast<std::int64_t>(P / 2)) s -= P;
    return std::to_string(s);
  }

private:
  static constexpr std::uint32_t reduce(std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  static constexpr ModP fromRaw(std::uint32_t raw) {
    ModP m;
    m.v_ = raw;
    return m;
  }

  std::uint32_t v_ = 0;
};

using GF32003 = ModP<32003>;

/// Exact rational number backed by GMP.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t x) : v_(static_cast<long>(x)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static std::string name() { return "qq"; }

  static Rational fromDecimal(std::string_view digits) {
    return Rational(mpq_class(mpz_class(std::string(digits), 10)));
  }

  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_, 0); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_, 0); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_, 0); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.isZero()) throw DomainError("division by zero in qq");
    return Rational(a.v_ / b.v_, 0);
  }
  Rational operator-() const { return Rational(-v_, 0); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  Rational inverse() const { return one() / *this; }

  std::string toString() const { return v_.get_str(); }

private:
  // GMP arithmetic on canonical operands yields canonical results.
  Rational(mpq_class q, int /*canonical*/) : v_(std::move(q)) {}

  mpq_class v_;
};

}  // namespace reflex

#endif  // REFLEX_FIELD_HPP
