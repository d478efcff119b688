#include "reflex/verify/evaluator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <thread>

#include "reflex/errors.hpp"
#include "reflex/field.hpp"
#include "reflex/invariants.hpp"
#include "reflex/verify/oracle.hpp"
#include "reflex/verify/properties.hpp"

namespace reflex::verify {

void parallelFor(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

const std::vector<std::string>& scenarioFunctions() {
  static const std::vector<std::string> names = {
      "cyclic",  "cokernel",     "free",        "residue",   "transpose",      "tensor",
      "hom",     "dual",         "syzygy",      "restrict",  "minimalize",     "tor",
      "ext",     "shift",        "sum",         "product",   "ann",            "fitting",
      "colon",   "intersect",    "dim",         "height",    "grade",          "depth",
      "depth_ab", "pd",          "rank",        "mu",        "is_zero",        "is_free",
      "is_torsion", "supp",      "locally_free", "free_off", "serre",          "torsionfree",
      "torsionless", "reflexive", "tor_independent", "depth_formula", "rigidity_witness",
      "betti",   "hf",           "hf_oracle",   "hs",        "subset",         "is_ci",
      "is_gorenstein", "is_cm",  "four_term",   "Finite",    "AtLeast"};
  return names;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string at(const Location& l) { return std::to_string(l.line) + ":" + std::to_string(l.column) + ": "; }

enum class VKind { None, Bool, Int, Inf, Pd, List, Text, Ring, Ideal, Module };

template <class K>
struct Value {
  VKind kind = VKind::None;
  bool b = false;
  long long i = 0;
  std::optional<PdResult> pd;
  std::vector<long long> list;
  std::string text;
  RingPtr<K> ring;
  std::optional<Ideal<K>> ideal;
  std::optional<FPModule<K>> module;
  /// Bound-limited result that is not a certificate.
  bool advisory = false;
  /// Certificate text shown next to the value.
  std::string detail;

  static Value boolean(bool v, std::string d = {}) {
    Value x;
    x.kind = VKind::Bool;
    x.b = v;
    x.detail = std::move(d);
    return x;
  }
  static Value integer(long long v) {
    Value x;
    x.kind = VKind::Int;
    x.i = v;
    return x;
  }
  static Value depth(const Depth& d) {
    if (!d) {
      Value x;
      x.kind = VKind::Inf;
      return x;
    }
    return integer(*d);
  }
  static Value ofPd(PdResult p) {
    Value x;
    x.kind = VKind::Pd;
    x.pd = p;
    return x;
  }
  static Value ofList(std::vector<long long> v) {
    Value x;
    x.kind = VKind::List;
    x.list = std::move(v);
    return x;
  }
  static Value ofText(std::string t) {
    Value x;
    x.kind = VKind::Text;
    x.text = std::move(t);
    return x;
  }
  static Value ofRing(RingPtr<K> r) {
    Value x;
    x.kind = VKind::Ring;
    x.ring = std::move(r);
    return x;
  }
  static Value ofIdeal(Ideal<K> id) {
    Value x;
    x.kind = VKind::Ideal;
    x.ideal = std::move(id);
    return x;
  }
  static Value ofModule(FPModule<K> m) {
    Value x;
    x.kind = VKind::Module;
    x.module = std::move(m);
    return x;
  }
};

std::string listText(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

template <class K>
std::string display(const Value<K>& v) {
  switch (v.kind) {
    case VKind::None: return "none";
    case VKind::Bool: return v.b ? "true" : "false";
    case VKind::Int: return std::to_string(v.i);
    case VKind::Inf: return "inf";
    case VKind::Pd: return v.pd->toString();
    case VKind::List: return listText(v.list);
    case VKind::Text: return v.text;
    case VKind::Ring: return v.ring->describe();
    case VKind::Ideal: return minimalize(*v.ideal).toString();
    case VKind::Module:
      if (isZero(*v.module)) return "0";
      return "nonzero (" + std::to_string(mu(*v.module)) + " generators)";
  }
  return "?";
}

template <class K>
class Evaluator {
public:
  explicit Evaluator(const Config& config) : config_(config) {}

  void declareRing(const Statement& s) {
    std::vector<std::string> texts;
    for (const auto& t : s.idealTexts) texts.push_back(t.text);
    RingPtr<K> ring;
    try {
      ring = makeRing<K>(s.variables, s.order, texts, s.flags);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), s.where.line, s.where.column);
    }
    env_[s.name] = Value<K>::ofRing(ring);
    current_ = ring;
  }

  void define(const Statement& s) {
    RingPtr<K> ctx = s.over ? env_.at(*s.over).ring : current_;
    Value<K> v = eval(s.expr, ctx);
    const auto& k = s.defineKind;
    if (k == "ideal" && v.kind != VKind::Ideal) throw InvalidArgument(at(s.where) + "'" + s.name + "' is not an ideal");
    if (k == "module") {
      if (v.kind == VKind::Ring) v = Value<K>::ofModule(FPModule<K>::free(v.ring, {0}));
      if (v.kind != VKind::Module) throw InvalidArgument(at(s.where) + "'" + s.name + "' is not a module");
    }
    env_[s.name] = std::move(v);
  }

  const RingPtr<K>& current() const { return current_; }

  CheckRecord check(const Statement& s, const RingPtr<K>& ctx) const {
    CheckRecord rec;
    rec.name = s.label.empty() ? s.expr.source : s.label;
    rec.kind = s.provenance;
    auto start = Clock::now();
    try {
      Value<K> lhs = eval(s.expr, ctx);
      Value<K> rhs = eval(s.expected, ctx);
      rec.expected = (s.op == "==" ? "" : s.op + " ") + display(rhs);
      rec.computed = display(lhs);
      if (!lhs.detail.empty()) rec.computed += " (" + lhs.detail + ")";
      bool ok = compare(lhs, s.op, rhs, s.expr.where);
      if (lhs.advisory || rhs.advisory) rec.status = Status::Advisory;
      else rec.status = ok ? Status::Pass : Status::Fail;
    } catch (const std::exception& e) {
      if (rec.expected.empty()) rec.expected = (s.op == "==" ? "" : s.op + " ") + s.expected.source;
      rec.computed = std::string("error: ") + e.what();
      rec.status = Status::Error;
    }
    rec.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rec;
  }

private:
  int bound() const { return config_.maxRes; }

  int degreeBound(const FPModule<K>& m) const {
    return config_.maxDegree ? *config_.maxDegree : defaultDegreeBound(m);
  }

  [[noreturn]] static void fail(const Expr& e, const std::string& msg) {
    throw InvalidArgument(at(e.where) + msg);
  }

  static const char* kindName(VKind k) {
    switch (k) {
      case VKind::None: return "none";
      case VKind::Bool: return "boolean";
      case VKind::Int: return "integer";
      case VKind::Inf: return "inf";
      case VKind::Pd: return "projective dimension";
      case VKind::List: return "list";
      case VKind::Text: return "text";
      case VKind::Ring: return "ring";
      case VKind::Ideal: return "ideal";
      case VKind::Module: return "module";
    }
    return "value";
  }

  static long long asInt(const Value<K>& v, const Expr& e) {
    if (v.kind != VKind::Int) fail(e, std::string("expected an integer, got ") + kindName(v.kind));
    return v.i;
  }
  static int asSmallInt(const Value<K>& v, const Expr& e) {
    long long x = asInt(v, e);
    if (x < -1000 || x > 1000) fail(e, "integer argument out of range");
    return static_cast<int>(x);
  }
  static const RingPtr<K>& asRing(const Value<K>& v, const Expr& e) {
    if (v.kind != VKind::Ring) fail(e, std::string("expected a ring, got ") + kindName(v.kind));
    return v.ring;
  }
  static const Ideal<K>& asIdeal(const Value<K>& v, const Expr& e) {
    if (v.kind != VKind::Ideal) fail(e, std::string("expected an ideal, got ") + kindName(v.kind));
    return *v.ideal;
  }
  static FPModule<K> asModule(const Value<K>& v, const Expr& e) {
    if (v.kind == VKind::Ring) return FPModule<K>::free(v.ring, {0});
    if (v.kind != VKind::Module) fail(e, std::string("expected a module, got ") + kindName(v.kind));
    return *v.module;
  }

  Polynomial<K> parsePoly(const RawText& t, const RingPtr<K>& ring) const {
    try {
      return ring->parse(t.text);
    } catch (const ParseError& e) {
      int col = t.where.column + std::max(0, e.column() - 1);
      std::string msg = e.what();
      auto pos = msg.find(": ");
      if (e.line() > 0 && pos != std::string::npos) msg = msg.substr(pos + 2);
      throw ParseError(msg, t.where.line, e.line() > 0 ? col : t.where.column);
    }
  }

  Value<K> eval(const Expr& e, const RingPtr<K>& ctx) const {
    switch (e.kind) {
      case Expr::Kind::Int: return Value<K>::integer(e.intValue);
      case Expr::Kind::Name: {
        if (e.name == "true") return Value<K>::boolean(true);
        if (e.name == "false") return Value<K>::boolean(false);
        if (e.name == "none") return Value<K>{};
        if (e.name == "inf") {
          Value<K> v;
          v.kind = VKind::Inf;
          return v;
        }
        auto it = env_.find(e.name);
        if (it == env_.end()) fail(e, "undefined name '" + e.name + "'");
        return it->second;
      }
      case Expr::Kind::Ideal: {
        if (!ctx) fail(e, "no ring declared");
        Ideal<K> id{ctx, {}};
        for (const auto& t : e.entries) {
          Polynomial<K> p = parsePoly(t, ctx);
          if (!vec::isHomogeneous(p, ctx->polyOrder()))
            throw InvalidArgument(at(t.where) + "ideal generator is not homogeneous");
          if (!p.isZero()) id.gens.push_back(std::move(p));
        }
        return Value<K>::ofIdeal(std::move(id));
      }
      case Expr::Kind::Matrix: {
        if (!ctx) fail(e, "no ring declared");
        Matrix<K> m(e.rows.size(), e.rows.front().size());
        for (std::size_t i = 0; i < e.rows.size(); ++i)
          for (std::size_t j = 0; j < e.rows[i].size(); ++j) m(i, j) = parsePoly(e.rows[i][j], ctx);
        Value<K> v = Value<K>::ofModule(FPModule<K>::cokernel(ctx, std::move(m)));
        return v;
      }
      case Expr::Kind::List: {
        std::vector<long long> xs;
        for (const auto& a : e.args) xs.push_back(asInt(eval(a, ctx), a));
        return Value<K>::ofList(std::move(xs));
      }
      case Expr::Kind::Negate: {
        Value<K> v = eval(e.args[0], ctx);
        if (v.kind == VKind::Inf) return Value<K>::ofPd(PdResult::zeroModule());
        return Value<K>::integer(-asInt(v, e.args[0]));
      }
      case Expr::Kind::Binary: {
        long long a = asInt(eval(e.args[0], ctx), e.args[0]);
        long long b = asInt(eval(e.args[1], ctx), e.args[1]);
        return Value<K>::integer(e.name == "+" ? a + b : a - b);
      }
      case Expr::Kind::Call: return call(e, ctx);
    }
    fail(e, "unsupported expression");
  }

  Value<K> call(const Expr& e, const RingPtr<K>& ctx) const {
    const std::string& f = e.name;
    std::vector<Value<K>> a;
    // Matrices passed to cokernel are evaluated in the ring named by the
    // optional second argument.
    if (f == "cokernel") {
      if (e.args.empty() || e.args.size() > 2) fail(e, "cokernel takes a matrix and an optional ring");
      RingPtr<K> r = ctx;
      if (e.args.size() == 2) r = asRing(eval(e.args[1], ctx), e.args[1]);
      if (e.args[0].kind != Expr::Kind::Matrix) {
        FPModule<K> m = asModule(eval(e.args[0], r), e.args[0]);
        return Value<K>::ofModule(m);
      }
      return eval(e.args[0], r);
    }
    for (const auto& x : e.args) a.push_back(eval(x, ctx));
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (a.size() < lo || a.size() > hi)
        fail(e, f + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                    " argument" + (hi == 1 ? "" : "s"));
    };
    auto mod = [&](std::size_t k) { return asModule(a[k], e.args[k]); };
    auto idl = [&](std::size_t k) -> const Ideal<K>& { return asIdeal(a[k], e.args[k]); };
    auto num = [&](std::size_t k) { return asSmallInt(a[k], e.args[k]); };
    using V = Value<K>;

    if (f == "Finite") { arity(1, 1); return V::ofPd(PdResult::finite(num(0))); }
    if (f == "AtLeast") { arity(1, 1); return V::ofPd(PdResult::atLeast(num(0))); }

    // Module constructions.
    if (f == "cyclic") { arity(1, 1); return V::ofModule(FPModule<K>::cyclic(idl(0))); }
    if (f == "free") {
      arity(1, 2);
      const RingPtr<K>& r = asRing(a[0], e.args[0]);
      std::vector<int> twists{0};
      if (a.size() == 2) {
        if (a[1].kind == VKind::List) {
          twists.clear();
          for (long long t : a[1].list) twists.push_back(static_cast<int>(t));
        } else {
          int rk = num(1);
          if (rk < 0) fail(e.args[1], "negative rank");
          twists.assign(static_cast<std::size_t>(rk), 0);
        }
      }
      return V::ofModule(FPModule<K>::free(r, twists));
    }
    if (f == "residue") { arity(1, 1); return V::ofModule(residueField(asRing(a[0], e.args[0]))); }
    if (f == "transpose") { arity(1, 1); return V::ofModule(transpose(mod(0))); }
    if (f == "tensor") { arity(2, 2); return V::ofModule(tensor(mod(0), mod(1))); }
    if (f == "hom") { arity(2, 2); return V::ofModule(hom(mod(0), mod(1))); }
    if (f == "dual") { arity(1, 1); return V::ofModule(dual(mod(0))); }
    if (f == "syzygy") { arity(2, 2); return V::ofModule(syzygyModule(mod(0), num(1))); }
    if (f == "restrict") { arity(2, 2); return V::ofModule(restrictScalars(mod(0), asRing(a[1], e.args[1]))); }
    if (f == "minimalize") { arity(1, 1); return V::ofModule(minimalize(mod(0))); }
    if (f == "tor") { arity(3, 3); return V::ofModule(tor(mod(0), mod(1), num(2), bound())); }
    if (f == "ext") { arity(3, 3); return V::ofModule(ext(mod(0), mod(1), num(2), bound())); }
    if (f == "shift") { arity(2, 2); return V::ofModule(shift(mod(0), num(1))); }
    if (f == "sum") {
      arity(2, 2);
      if (a[0].kind == VKind::Ideal) return V::ofIdeal(idealSum(idl(0), idl(1)));
      return V::ofModule(directSum(mod(0), mod(1)));
    }

    // Ideals.
    if (f == "product") { arity(2, 2); return V::ofIdeal(idealProduct(idl(0), idl(1))); }
    if (f == "ann") { arity(1, 1); return V::ofIdeal(annihilator(mod(0))); }
    if (f == "fitting") { arity(2, 2); return V::ofIdeal(fittingIdeal(mod(0), num(1))); }
    if (f == "colon") { arity(2, 2); return V::ofIdeal(colon(idl(0), idl(1))); }
    if (f == "intersect") { arity(2, 2); return V::ofIdeal(intersect(idl(0), idl(1))); }

    // Numeric invariants.
    if (f == "dim") {
      arity(1, 1);
      if (a[0].kind == VKind::Ring) return V::integer(a[0].ring->dimension());
      if (a[0].kind == VKind::Ideal) return V::integer(dimension(FPModule<K>::cyclic(idl(0))));
      return V::integer(dimension(mod(0)));
    }
    if (f == "height") { arity(1, 1); return V::integer(height(idl(0))); }
    if (f == "grade") {
      arity(1, 2);
      if (a.size() == 1) return V::depth(grade(idl(0)));
      return V::depth(grade(idl(0), mod(1)));
    }
    if (f == "depth") { arity(1, 1); return V::depth(depth(mod(0))); }
    if (f == "depth_ab") { arity(1, 1); return V::depth(depthAuslanderBuchsbaum(mod(0))); }
    if (f == "pd") { arity(1, 1); return V::ofPd(pd(mod(0), bound())); }
    if (f == "rank") { arity(1, 1); return V::integer(rank(mod(0), bound())); }
    if (f == "mu") {
      arity(1, 1);
      if (a[0].kind == VKind::Ideal) return V::integer(static_cast<long long>(minimalize(idl(0)).gens.size()));
      return V::integer(static_cast<long long>(mu(mod(0))));
    }

    // Predicates.
    if (f == "is_zero") {
      arity(1, 1);
      if (a[0].kind == VKind::Ideal) return V::boolean(isZeroIdeal(idl(0)));
      return V::boolean(isZero(mod(0)));
    }
    if (f == "is_free") { arity(1, 1); return V::boolean(isFree(mod(0))); }
    if (f == "is_torsion") { arity(1, 1); return V::boolean(isTorsion(mod(0))); }
    if (f == "supp") {
      arity(2, 2);
      Ideal<K> an = annihilator(mod(0));
      return V::boolean(supportContains(mod(0), idl(1)), "ann = " + minimalize(an).toString());
    }
    if (f == "locally_free") {
      arity(2, 2);
      auto cert = localFreeness(mod(0), idl(1));
      return V::boolean(cert.free, cert.detail);
    }
    if (f == "free_off") { arity(2, 2); return freeOff(mod(0), idl(1)); }
    if (f == "serre" || f == "torsionfree") {
      arity(2, 2);
      int n = num(1);
      if (f == "serre" && a[0].kind == VKind::Ring) {
        const auto& r = a[0].ring;
        if (!r->flags().cohenMacaulay)
          throw UnsupportedRing("(S_n) for a ring is decided only for Cohen-Macaulay rings; " + r->describe() +
                                " is not");
        return V::boolean(true, "R is Cohen-Macaulay");
      }
      SerreReport rep = f == "serre" ? serre(mod(0), n, bound()) : torsionfreeness(mod(0), n, bound());
      return V::boolean(rep.holds, certificateText(rep));
    }
    if (f == "torsionless" || f == "reflexive") {
      arity(1, 1);
      SerreReport rep = torsionfreeness(mod(0), f == "torsionless" ? 1 : 2, bound());
      return V::boolean(rep.holds, certificateText(rep));
    }
    if (f == "tor_independent") { arity(2, 2); return torIndependent(mod(0), mod(1)); }
    if (f == "depth_formula") {
      arity(2, 2);
      DepthFormulaReport rep = checkDepthFormula(mod(0), mod(1), bound());
      V v = V::boolean(rep.holds && !rep.vacuous, rep.toString());
      v.advisory = rep.vacuous || rep.certification == Certification::Advisory || !rep.torIndependent;
      return v;
    }
    if (f == "rigidity_witness") {
      arity(2, 2);
      try {
        auto w = rigidityWitness(mod(0), mod(1), bound());
        if (!w) return V{};
        V v = V::integer(w->n);
        v.detail = "Tor_1(Y, M) = 0, Tor_2(Y, M) != 0 for Y = Tr Omega^" + std::to_string(w->n) + " Tr N";
        return v;
      } catch (const BoundExceeded& ex) {
        V v;
        v.advisory = true;
        v.detail = ex.what();
        return v;
      }
    }
    if (f == "is_ci") { arity(1, 1); return V::boolean(asRing(a[0], e.args[0])->flags().completeIntersection); }
    if (f == "is_gorenstein") { arity(1, 1); return V::boolean(asRing(a[0], e.args[0])->flags().gorenstein); }
    if (f == "is_cm") { arity(1, 1); return V::boolean(asRing(a[0], e.args[0])->flags().cohenMacaulay); }
    if (f == "subset") { arity(2, 2); return V::boolean(isSubset(idl(0), idl(1))); }

    // Betti numbers and Hilbert data.
    if (f == "betti") {
      arity(2, 2);
      Resolution<K> res = resolve(mod(0), num(1));
      std::vector<long long> xs;
      for (auto b : res.bettiNumbers()) xs.push_back(static_cast<long long>(b));
      V v = V::ofList(std::move(xs));
      v.detail = res.pd().toString();
      return v;
    }
    if (f == "hf" || f == "hf_oracle") {
      arity(1, 2);
      FPModule<K> m = mod(0);
      int d = a.size() == 2 ? num(1) : degreeBound(m);
      HilbertFunction hf = hilbertFunction(m, d);
      if (f == "hf_oracle") hf = oracleHilbertFunction(m, hf.low, d);
      V v = V::ofList(std::vector<long long>(hf.values.begin(), hf.values.end()));
      v.detail = "degrees " + std::to_string(hf.low) + ".." + std::to_string(d);
      return v;
    }
    if (f == "hs") { arity(1, 1); return V::ofText(hilbertSeries(mod(0)).toString()); }
    if (f == "four_term") { arity(2, 2); return fourTerm(mod(0), mod(1)); }
    fail(e, "unknown function '" + f + "'");
  }

  static std::string certificateText(const SerreReport& rep) {
    std::string s;
    for (const auto& [i, zero] : rep.certificate) {
      if (!s.empty()) s += ", ";
      s += "Ext^" + std::to_string(i) + (zero ? " = 0" : " != 0");
    }
    return s.empty() ? "vacuous" : s;
  }

  // Tor_i(M, N) = 0 for all i >= 1: certified through a finite projective
  // dimension, otherwise checked up to the resolution bound (advisory).
  Value<K> torIndependent(const FPModule<K>& m, const FPModule<K>& n) const {
    PdResult pn = pd(n, bound());
    PdResult pm = pd(m, bound());
    const FPModule<K>* fin = nullptr;
    const FPModule<K>* other = nullptr;
    std::string which;
    // Tor_i needs F_{i+1}, so only Tor_1..Tor_{L-1} fit in the bound.
    int upTo = bound() - 1;
    if (pn.isFinite()) {
      fin = &n, other = &m, upTo = pn.value(), which = "pd N = ";
    } else if (pm.isFinite()) {
      fin = &m, other = &n, upTo = pm.value(), which = "pd M = ";
    }
    if (pn.kind() == PdResult::Kind::ZeroModule || pm.kind() == PdResult::Kind::ZeroModule)
      return Value<K>::boolean(true, "a module is zero");
    for (int i = 1; i <= upTo; ++i) {
      bool zero = fin ? isZero(tor(*fin, *other, i, bound())) : isZero(tor(m, n, i, bound()));
      if (!zero) return Value<K>::boolean(false, "Tor_" + std::to_string(i) + " != 0");
    }
    if (fin)
      return Value<K>::boolean(true, which + std::to_string(upTo) + ", Tor_1..Tor_" + std::to_string(upTo) + " = 0");
    Value<K> v = Value<K>::boolean(true, "Tor_1..Tor_" + std::to_string(upTo) + " = 0, no finite pd within bound");
    v.advisory = true;
    return v;
  }

  // X_q is free for every prime q not containing p: the non-free locus
  // V(L), L = sum_j Fitt_j * ann(Fitt_{j-1}), lies in V(p), i.e. p ⊆ rad L.
  // Radical membership is searched up to exponent 12.
  Value<K> freeOff(const FPModule<K>& x, const Ideal<K>& p) const {
    FPModule<K> mm = minimalize(x);
    const RingPtr<K>& ring = p.ring;
    Ideal<K> loc{ring, {}};
    Ideal<K> prev{ring, {}};
    Ideal<K> annPrev = Ideal<K>::unit(ring);
    for (int j = 0; j <= static_cast<int>(mm.numGenerators()); ++j) {
      Ideal<K> fj = fittingIdeal(mm, j);
      loc = idealSum(loc, idealProduct(fj, annPrev));
      prev = fj;
      annPrev = colon(Ideal<K>{ring, {}}, prev);
    }
    loc = minimalize(loc);
    std::vector<int> exps;
    for (const auto& g : minimalize(p).gens) {
      Polynomial<K> power = g;
      int k = 1;
      while (!isMember(power, loc)) {
        if (++k > 12)
          return Value<K>::boolean(false, "no power <= 12 of " + ring->format(g) + " lies in the free-locus ideal " +
                                              loc.toString());
        power = ring->mul(power, g);
      }
      exps.push_back(k);
    }
    std::string d = "p inside rad " + loc.toString() + " (exponents";
    for (int k : exps) d += " " + std::to_string(k);
    return Value<K>::boolean(true, d + ")");
  }

  Value<K> fourTerm(const FPModule<K>& m, const FPModule<K>& n) const {
    FourTermResult r = fourTermDefect(m, n, bound(), config_.maxDegree);
    Value<K> v = Value<K>::integer(r.defect);
    v.detail = "degrees " + std::to_string(r.low) + ".." + std::to_string(r.high);
    return v;
  }

  static int order(const Value<K>& v, const Expr& e) {
    if (v.kind == VKind::Inf) return 0;
    if (v.kind != VKind::Int) fail(e, std::string("cannot order a ") + kindName(v.kind));
    return 1;
  }

  static bool compare(const Value<K>& l, const std::string& op, const Value<K>& r, const Location& where) {
    Expr pos;
    pos.where = where;
    bool ordered = op != "==" && op != "!=";
    if ((l.kind == VKind::Int || l.kind == VKind::Inf) && (r.kind == VKind::Int || r.kind == VKind::Inf)) {
      // inf compares above every integer and equal to itself.
      int c;
      if (l.kind == VKind::Inf || r.kind == VKind::Inf)
        c = (l.kind == VKind::Inf) - (r.kind == VKind::Inf);
      else
        c = (l.i > r.i) - (l.i < r.i);
      order(l, pos);
      if (op == "==") return c == 0;
      if (op == "!=") return c != 0;
      if (op == ">=") return c >= 0;
      if (op == "<=") return c <= 0;
      if (op == ">") return c > 0;
      return c < 0;
    }
    if (ordered) fail(pos, std::string("'") + op + "' needs integers or inf");
    bool eq;
    if (l.kind == VKind::Module && r.kind == VKind::Int) {
      if (r.i != 0) fail(pos, "a module can only be compared with 0");
      eq = isZero(*l.module);
    } else if (l.kind == VKind::Pd && r.kind == VKind::Int) {
      eq = l.pd->isFinite() && l.pd->value() == r.i;
    } else if (l.kind == VKind::Module && r.kind == VKind::Module) {
      // Compared through Hilbert series; not an isomorphism test.
      HilbertSeries hl = hilbertSeries(*l.module), hr = hilbertSeries(*r.module);
      eq = hl.nvars == hr.nvars && hl.numerator == hr.numerator;
    } else if (l.kind == VKind::Ideal && r.kind == VKind::Int) {
      if (r.i == 0) eq = isZeroIdeal(*l.ideal);
      else if (r.i == 1) eq = isUnitIdeal(*l.ideal);
      else fail(pos, "an ideal can only be compared with 0, 1 or an ideal");
    } else if (l.kind == VKind::Ideal && r.kind == VKind::Ideal) {
      eq = isSubset(*l.ideal, *r.ideal) && isSubset(*r.ideal, *l.ideal);
    } else if (l.kind != r.kind) {
      fail(pos, std::string("cannot compare ") + kindName(l.kind) + " with " + kindName(r.kind));
    } else {
      switch (l.kind) {
        case VKind::None: eq = true; break;
        case VKind::Bool: eq = l.b == r.b; break;
        case VKind::Pd: eq = *l.pd == *r.pd; break;
        case VKind::List: eq = l.list == r.list; break;
        case VKind::Text: eq = l.text == r.text; break;
        case VKind::Ring: eq = l.ring == r.ring; break;
        default: fail(pos, std::string("cannot compare ") + kindName(l.kind) + " values");
      }
    }
    return op == "==" ? eq : !eq;
  }

  Config config_;
  std::map<std::string, Value<K>> env_;
  RingPtr<K> current_;
};

template <class K>
Report runTyped(const Scenario& sc, const Config& config) {
  Report report;
  report.scenario = sc.id;
  report.config = config;
  Evaluator<K> ev(config);

  struct Pending {
    const Statement* stmt;
    RingPtr<K> ctx;
  };
  std::vector<Pending> checks;
  for (const auto& s : sc.statements) {
    try {
      switch (s.kind) {
        case Statement::Kind::Field: break;
        case Statement::Kind::Ring: ev.declareRing(s); break;
        case Statement::Kind::Define: ev.define(s); break;
        default: checks.push_back({&s, ev.current()});
      }
    } catch (const std::exception& e) {
      CheckRecord rec;
      rec.name = (s.kind == Statement::Kind::Ring ? "ring " : s.defineKind + " ") + s.name;
      rec.kind = "definition";
      rec.expected = "defined";
      rec.computed = std::string("error: ") + e.what();
      rec.status = Status::Error;
      report.checks.push_back(std::move(rec));
      return report;
    }
  }

  std::vector<CheckRecord> records(checks.size());
  std::vector<std::size_t> gates, asserts;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Statement& s = *checks[i].stmt;
    if (s.kind == Statement::Kind::Require) gates.push_back(i);
    else if (s.kind == Statement::Kind::Assert) asserts.push_back(i);
    else records[i] = {s.text, s.provenance, "out of scope", "not computed", Status::Skipped, 0};
  }
  parallelFor(gates.size(), config.jobs, [&](std::size_t k) {
    std::size_t i = gates[k];
    records[i] = ev.check(*checks[i].stmt, checks[i].ctx);
  });
  std::string failed;
  for (std::size_t i : gates)
    if (records[i].status != Status::Pass) {
      if (records[i].status == Status::Advisory) records[i].status = Status::Fail;
      if (failed.empty()) failed = records[i].name;
    }
  if (failed.empty()) {
    parallelFor(asserts.size(), config.jobs, [&](std::size_t k) {
      std::size_t i = asserts[k];
      records[i] = ev.check(*checks[i].stmt, checks[i].ctx);
    });
  } else {
    for (std::size_t i : asserts) {
      const Statement& s = *checks[i].stmt;
      records[i] = {s.label.empty() ? s.expr.source : s.label, s.provenance,
                    (s.op == "==" ? "" : s.op + " ") + s.expected.source,
                    "skipped: hypothesis '" + failed + "' not established", Status::Skipped, 0};
    }
  }
  for (auto& r : records) report.checks.push_back(std::move(r));
  return report;
}

}  // namespace

Report runScenario(const Scenario& scenario, const Config& config) {
  Config c = config;
  if (c.field.empty()) c.field = scenario.field.value_or("gf32003");
  if (c.field == "gf32003") return runTyped<GF32003>(scenario, c);
  if (c.field == "qq") return runTyped<Rational>(scenario, c);
  if (c.field != "both") throw InvalidArgument("unknown field '" + c.field + "'");

  Report a = runTyped<GF32003>(scenario, c);
  Report b = runTyped<Rational>(scenario, c);
  Report out;
  out.scenario = scenario.id;
  out.config = c;
  bool agree = a.checks.size() == b.checks.size();
  std::string first;
  for (std::size_t i = 0; agree && i < a.checks.size(); ++i)
    if (a.checks[i].status != b.checks[i].status || a.checks[i].computed != b.checks[i].computed) {
      agree = false;
      first = a.checks[i].name;
    }
  for (auto& r : a.checks) {
    r.name = "[gf32003] " + r.name;
    out.checks.push_back(std::move(r));
  }
  for (auto& r : b.checks) {
    r.name = "[qq] " + r.name;
    out.checks.push_back(std::move(r));
  }
  CheckRecord agreement;
  agreement.name = "field agreement";
  agreement.kind = "derived";
  agreement.expected = "identical outcomes";
  agreement.computed = agree ? "identical outcomes" : "differ at '" + first + "'";
  agreement.status = agree ? Status::Pass : Status::Fail;
  out.checks.push_back(std::move(agreement));
  return out;
}

Report runScenarioText(const std::string& text, const std::string& id, const Config& config) {
  return runScenario(parseScenario(text, id), config);
}

}  // namespace reflex::verify
