#include "reflex/monomial.hpp"

#include <algorithm>

namespace reflex {

Monomial::Monomial(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent)
      throw InvalidArgument("exponent out of range: " + std::to_string(exps[i]));
    exps_[i] = static_cast<std::uint8_t>(exps[i]);
    degree_ += exps[i];
  }
}

Monomial Monomial::variable(int index) {
  if (index < 0 || index >= kMaxVars) throw InvalidArgument("variable index out of range");
  Monomial m;
  m.exps_[static_cast<std::size_t>(index)] = 1;
  m.degree_ = 1;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = a.exps_[i] + b.exps_[i];
    if (e > kMaxExponent) throw InvalidArgument("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::strong_ordering compareLex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  return std::strong_ordering::equal;
}

std::strong_ordering compareGrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  return std::strong_ordering::equal;
}

std::string Monomial::toString(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = exps_[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string toString(OrderKind kind) {
  return kind == OrderKind::Grevlex ? "grevlex" : "lex";
}

OrderKind parseOrderKind(const std::string& text) {
  if (text == "grevlex") return OrderKind::Grevlex;
  if (text == "lex") return OrderKind::Lex;
  throw InvalidArgument("unknown monomial order '" + text + "'");
}

}  // namespace reflex
