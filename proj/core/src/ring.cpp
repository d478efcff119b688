#include "reflex/ring.hpp"

#include <cctype>
#include <string_view>

#include "reflex/buchberger.hpp"
#include "reflex/errors.hpp"
#include "reflex/field.hpp"

namespace reflex {

namespace {

// Recursive-descent parser for
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
// Division is only defined by nonzero constants.
template <class K>
class PolyParser {
public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, const ModuleOrder& order)
      : text_(text), vars_(vars), order_(order) {}

  Polynomial<K> parse() {
    skipSpace();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Polynomial<K> p = expr();
    skipSpace();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"",
                     0, static_cast<int>(pos_ + 1));
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> expr() {
    Polynomial<K> acc = term();
    while (true) {
      if (accept('+')) {
        acc = vec::add(acc, term(), order_);
      } else if (accept('-')) {
        acc = vec::sub(acc, term(), order_);
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> term() {
    Polynomial<K> acc = unary();
    while (true) {
      if (accept('*')) {
        acc = vec::mulPoly(acc, unary(), order_);
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial<K> d = unary();
        if (d.isZero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (d.size() != 1 || !d.lead().mono.isOne()) {
          pos_ = at;
          fail("division by a non-constant");
        }
        acc = vec::scale(acc, d.lead().coef.inverse());
      } else {
        skipSpace();
        if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
          fail("missing '*' between factors");
        return acc;
      }
    }
  }

  Polynomial<K> unary() {
    if (accept('-')) return vec::scale(unary(), -K::one());
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<K> power() {
    Polynomial<K> base = primary();
    if (!accept('^')) return base;
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) fail("exponent too large");
    int e = std::stoi(digits);
    Polynomial<K> out = Polynomial<K>::constant(K::one());
    for (int i = 0; i < e; ++i) out = vec::mulPoly(out, base, order_);
    return out;
  }

  Polynomial<K> primary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial<K>::constant(K::fromDecimal(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
          return Polynomial<K>::monomial(K::one(), Monomial::variable(static_cast<int>(i)));
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const ModuleOrder& order_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Polynomial<K> parseAmbient(const std::string& text, const std::vector<std::string>& variables,
                           OrderKind order) {
  ModuleOrder mo(order, {0});
  return PolyParser<K>(text, variables, mo).parse();
}

template <class K>
QuotientRing<K>::QuotientRing(std::vector<std::string> variables, OrderKind order,
                              std::vector<Polynomial<K>> definingIdeal,
                              std::vector<Polynomial<K>> definingGb, RingFlags flags,
                              int dimension)
    : variables_(std::move(variables)),
      order_(order),
      polyOrder_(order, {0}),
      definingIdeal_(std::move(definingIdeal)),
      definingGb_(std::move(definingGb)),
      flags_(flags),
      dimension_(dimension) {}

template <class K>
Polynomial<K> QuotientRing<K>::reduce(const Polynomial<K>& p) const {
  checkMember(p);
  return reduceModIdeal(p, definingGb_, polyOrder_);
}

template <class K>
void QuotientRing<K>::checkMember(const Polynomial<K>& p) const {
  for (const auto& t : p) {
    if (t.comp != 0) throw RingMismatch("expected a ring element, got a module vector");
    for (int i = nvars(); i < kMaxVars; ++i)
      if (t.mono[i] != 0) throw RingMismatch("polynomial uses variables outside " + describe());
  }
}

template <class K>
Polynomial<K> QuotientRing<K>::variable(int index) const {
  if (index < 0 || index >= nvars()) throw InvalidArgument("variable index out of range");
  return reduce(Polynomial<K>::monomial(K::one(), Monomial::variable(index)));
}

template <class K>
Polynomial<K> QuotientRing<K>::add(const Polynomial<K>& a, const Polynomial<K>& b) const {
  return reduce(vec::add(a, b, polyOrder_));
}

template <class K>
Polynomial<K> QuotientRing<K>::sub(const Polynomial<K>& a, const Polynomial<K>& b) const {
  return reduce(vec::sub(a, b, polyOrder_));
}

template <class K>
Polynomial<K> QuotientRing<K>::mul(const Polynomial<K>& a, const Polynomial<K>& b) const {
  checkMember(a);
  checkMember(b);
  return reduce(vec::mulPoly(a, b, polyOrder_));
}

template <class K>
Polynomial<K> QuotientRing<K>::scale(const Polynomial<K>& a, const K& c) const {
  return reduce(vec::scale(a, c));
}

template <class K>
Polynomial<K> QuotientRing<K>::arith(ArithOp op, const Polynomial<K>& a, const Polynomial<K>& b) const {
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::ScalarMul:
      if (b.isZero()) return {};
      if (b.size() != 1 || !b.lead().mono.isOne())
        throw InvalidArgument("scalar multiplication needs a constant right operand");
      return scale(a, b.lead().coef);
  }
  throw InvalidArgument("unknown arithmetic operation");
}

template <class K>
Polynomial<K> QuotientRing<K>::parse(const std::string& text) const {
  return reduce(parseAmbient<K>(text, variables_, order_));
}

template <class K>
std::string QuotientRing<K>::describe() const {
  std::string out = "k[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) out += ",";
    out += variables_[i];
  }
  out += "]";
  if (!definingIdeal_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < definingIdeal_.size(); ++i) {
      if (i) out += ", ";
      out += format(definingIdeal_[i]);
    }
    out += ")";
  }
  return out;
}

template class QuotientRing<GF32003>;
template class QuotientRing<Rational>;
template Polynomial<GF32003> parseAmbient<GF32003>(const std::string&, const std::vector<std::string>&, OrderKind);
template Polynomial<Rational> parseAmbient<Rational>(const std::string&, const std::vector<std::string>&, OrderKind);

}  // namespace reflex
