#include "reflex/homology.hpp"

#include <algorithm>
#include <sstream>

#include "reflex/errors.hpp"
#include "reflex/field.hpp"

namespace reflex {

std::string PdResult::toString() const {
  switch (kind_) {
    case Kind::Finite: return "Finite(" + std::to_string(value_) + ")";
    case Kind::AtLeast: return "AtLeast(" + std::to_string(value_) + ")";
    case Kind::ZeroModule: return "-inf";
  }
  return "?";
}

std::size_t BettiTable::total(int i) const {
  std::size_t sum = 0;
  for (const auto& [key, count] : entries)
    if (key.first == i) sum += count;
  return sum;
}

int BettiTable::length() const {
  int len = -1;
  for (const auto& [key, count] : entries)
    if (count > 0) len = std::max(len, key.first);
  return len;
}

std::string BettiTable::toString() const {
  int len = length();
  if (len < 0) return "0\n";
  int lowRow = 0, highRow = 0;
  bool first = true;
  for (const auto& [key, count] : entries) {
    if (count == 0) continue;
    int row = key.second - key.first;
    lowRow = first ? row : std::min(lowRow, row);
    highRow = first ? row : std::max(highRow, row);
    first = false;
  }
  std::vector<std::string> header{""};
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i <= len; ++i) header.push_back(std::to_string(i));
  std::vector<std::string> totals{"total:"};
  for (int i = 0; i <= len; ++i) totals.push_back(std::to_string(total(i)));
  rows.push_back(totals);
  for (int r = lowRow; r <= highRow; ++r) {
    std::vector<std::string> line{std::to_string(r) + ":"};
    for (int i = 0; i <= len; ++i) {
      auto it = entries.find({i, i + r});
      line.push_back(it == entries.end() || it->second == 0 ? "." : std::to_string(it->second));
    }
    rows.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  };
  measure(header);
  for (const auto& line : rows) measure(line);
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << ' ';
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& line : rows) emit(line);
  return out.str();
}

namespace {

template <class K>
std::vector<int> columnDegrees(const Matrix<K>& m, const FreeModule<K>& target) {
  ModuleOrder order = target.order();
  std::vector<int> out;
  for (const auto& col : m.columns(order)) {
    auto d = vec::homogeneousDegree(col, order);
    if (!d) throw InternalError("syzygy column without a degree");
    out.push_back(*d);
  }
  return out;
}

// F (x) N for F free with the given twists.
template <class K>
FPModule<K> freeTensor(const std::vector<int>& twists, const FPModule<K>& n) {
  std::vector<int> gens, rels;
  for (int t : twists) {
    for (int b : n.generatorDegrees()) gens.push_back(t + b);
    for (int d : n.relationDegrees()) rels.push_back(t + d);
  }
  Matrix<K> block = n.presentation().kronIdentityLeft(twists.size());
  if (n.numGenerators() == 0) block = Matrix<K>(0, rels.size());
  return FPModule<K>(n.ring(), gens, rels, std::move(block));
}

// Hom(F, N) for F free with the given twists.
template <class K>
FPModule<K> freeHom(const std::vector<int>& twists, const FPModule<K>& n) {
  std::vector<int> gens, rels;
  for (int t : twists) {
    for (int b : n.generatorDegrees()) gens.push_back(b - t);
    for (int d : n.relationDegrees()) rels.push_back(d - t);
  }
  Matrix<K> block = n.presentation().kronIdentityLeft(twists.size());
  if (n.numGenerators() == 0) block = Matrix<K>(0, rels.size());
  return FPModule<K>(n.ring(), gens, rels, std::move(block));
}

template <class K>
Matrix<K> tensorMap(const Matrix<K>& d, std::size_t rn) {
  if (rn == 0) return Matrix<K>(0, 0);
  return d.kronIdentityRight(rn);
}

template <class K>
void requireLength(const Resolution<K>& res, int needed) {
  if (res.length() < needed && !res.terminated)
    throw BoundExceeded("resolution bound " + std::to_string(res.bound) +
                        " is too small; length " + std::to_string(needed) + " is needed");
}

// Tor_i(M, N) from a resolution of M computed through F_{i+1}.
template <class K>
FPModule<K> torFrom(const Resolution<K>& res, const FPModule<K>& n, int i) {
  const auto& ring = n.ring();
  if (i > res.length()) return FPModule<K>::zero(ring);
  std::size_t rn = n.numGenerators();
  FPModule<K> c = freeTensor(res.twists[static_cast<std::size_t>(i)], n);
  if (c.numGenerators() == 0) return FPModule<K>::zero(ring);
  std::optional<Matrix<K>> out;
  FPModule<K> cout = FPModule<K>::zero(ring);
  if (i >= 1) {
    cout = freeTensor(res.twists[static_cast<std::size_t>(i - 1)], n);
    out = tensorMap(res.differentials[static_cast<std::size_t>(i - 1)], rn);
  }
  Matrix<K> in(c.numGenerators(), 0);
  std::vector<int> inDegrees;
  if (i + 1 <= res.length()) {
    in = tensorMap(res.differentials[static_cast<std::size_t>(i)], rn);
    inDegrees = freeTensor(res.twists[static_cast<std::size_t>(i + 1)], n).generatorDegrees();
  }
  return homologyAt(c, out, cout, in, inDegrees);
}

// Ext^i(M, N) from a resolution of M computed through F_{i+1}.
template <class K>
FPModule<K> extFrom(const Resolution<K>& res, const FPModule<K>& n, int i) {
  const auto& ring = n.ring();
  if (i > res.length()) return FPModule<K>::zero(ring);
  std::size_t rn = n.numGenerators();
  FPModule<K> c = freeHom(res.twists[static_cast<std::size_t>(i)], n);
  if (c.numGenerators() == 0) return FPModule<K>::zero(ring);
  std::optional<Matrix<K>> out;
  FPModule<K> cout = FPModule<K>::zero(ring);
  if (i + 1 <= res.length()) {
    cout = freeHom(res.twists[static_cast<std::size_t>(i + 1)], n);
    out = tensorMap(res.differentials[static_cast<std::size_t>(i)].transpose(), rn);
  }
  Matrix<K> in(c.numGenerators(), 0);
  std::vector<int> inDegrees;
  if (i >= 1) {
    in = tensorMap(res.differentials[static_cast<std::size_t>(i - 1)].transpose(), rn);
    inDegrees = freeHom(res.twists[static_cast<std::size_t>(i - 1)], n).generatorDegrees();
  }
  return homologyAt(c, out, cout, in, inDegrees);
}

template <class K>
RingPtr<K> ambientRing(const QuotientRing<K>& ring) {
  return makePolynomialRing<K>(ring.variables(), ring.orderKind());
}

}  // namespace

template <class K>
std::vector<std::size_t> Resolution<K>::bettiNumbers() const {
  std::vector<std::size_t> out;
  for (const auto& t : twists) out.push_back(t.size());
  return out;
}

template <class K>
BettiTable Resolution<K>::betti() const {
  BettiTable table;
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (int d : twists[i]) ++table.entries[{static_cast<int>(i), d}];
  return table;
}

template <class K>
PdResult Resolution<K>::pd() const {
  if (module.numGenerators() == 0) return PdResult::zeroModule();
  if (terminated) return PdResult::finite(length());
  return PdResult::atLeast(bound);
}

template <class K>
bool Resolution<K>::isComplex() const {
  for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
    Matrix<K> p = multiply(*module.ring(), differentials[i], differentials[i + 1]);
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c)
        if (!p(r, c).isZero()) return false;
  }
  return true;
}

template <class K>
bool Resolution<K>::isMinimal() const {
  return std::none_of(differentials.begin(), differentials.end(),
                      [](const Matrix<K>& d) { return d.hasUnitEntry(); });
}

template <class K>
Resolution<K> resolve(const FPModule<K>& m, int bound) {
  if (bound < 0) throw InvalidArgument("resolution bound must be nonnegative");
  FPModule<K> mm = minimalize(m);
  const auto& ring = mm.ring();
  Resolution<K> res{mm, {mm.generatorDegrees()}, {}, bound, false};
  if (mm.numGenerators() == 0) {
    res.terminated = true;
    return res;
  }
  Matrix<K> d = mm.presentation();
  std::vector<int> degrees = mm.relationDegrees();
  int i = 1;
  while (true) {
    if (d.cols() == 0) {
      res.terminated = true;
      break;
    }
    if (i > bound) break;
    res.differentials.push_back(d);
    res.twists.push_back(degrees);
    FreeModule<K> target{ring, res.twists[static_cast<std::size_t>(i - 1)]};
    Matrix<K> next = syzygyMatrix(d, target, degrees);
    std::vector<int> nextDegrees = columnDegrees(next, FreeModule<K>{ring, degrees});
    d = std::move(next);
    degrees = std::move(nextDegrees);
    ++i;
  }
  return res;
}

template <class K>
PdResult pd(const FPModule<K>& m, int bound) {
  return resolve(m, bound).pd();
}

template <class K>
FPModule<K> transpose(const FPModule<K>& m) {
  FPModule<K> mm = minimalize(m);
  std::vector<int> gens, rels;
  for (int c : mm.relationDegrees()) gens.push_back(-c);
  for (int a : mm.generatorDegrees()) rels.push_back(-a);
  return minimalize(FPModule<K>(mm.ring(), gens, rels, mm.presentation().transpose()));
}

template <class K>
FPModule<K> syzygyModule(const FPModule<K>& m, int n) {
  if (n < 0) throw InvalidArgument("syzygy index must be nonnegative");
  if (n == 0) return minimalize(m);
  Resolution<K> res = resolve(m, n + 1);
  if (res.length() < n) return FPModule<K>::zero(m.ring());
  const auto& gens = res.twists[static_cast<std::size_t>(n)];
  if (res.length() == n) return FPModule<K>::free(m.ring(), gens);
  return FPModule<K>(m.ring(), gens, res.twists[static_cast<std::size_t>(n + 1)],
                     res.differentials[static_cast<std::size_t>(n)]);
}

template <class K>
FPModule<K> tor(const FPModule<K>& m, const FPModule<K>& n, int i, int bound) {
  requireSameRing(m, n);
  if (i < 0) throw InvalidArgument("Tor index must be nonnegative");
  Resolution<K> res = resolve(m, std::min(i + 1, bound));
  requireLength(res, i + 1);
  return torFrom(res, minimalize(n), i);
}

template <class K>
FPModule<K> ext(const FPModule<K>& m, const FPModule<K>& n, int i, int bound) {
  requireSameRing(m, n);
  if (i < 0) throw InvalidArgument("Ext index must be nonnegative");
  Resolution<K> res = resolve(m, std::min(i + 1, bound));
  requireLength(res, i + 1);
  return extFrom(res, minimalize(n), i);
}

std::string depthToString(const Depth& d) {
  return d ? std::to_string(*d) : std::string("inf");
}

template <class K>
FPModule<K> residueField(const RingPtr<K>& ring) {
  Ideal<K> max{ring, {}};
  for (int i = 0; i < ring->nvars(); ++i) max.gens.push_back(ring->variable(i));
  return FPModule<K>::cyclic(max);
}

template <class K>
Depth depth(const FPModule<K>& m) {
  FPModule<K> mm = minimalize(m);
  if (mm.numGenerators() == 0) return std::nullopt;
  int top = mm.ring()->dimension() + 1;
  Resolution<K> res = resolve(residueField(mm.ring()), top + 1);
  for (int i = 0; i <= top; ++i)
    if (!isZero(extFrom(res, mm, i))) return i;
  throw InternalError("no nonvanishing Ext(k, M) up to dim R + 1 for a nonzero module");
}

template <class K>
Depth depthAuslanderBuchsbaum(const FPModule<K>& m) {
  FPModule<K> mm = minimalize(m);
  if (mm.numGenerators() == 0) return std::nullopt;
  const auto& ring = mm.ring();
  int n = ring->nvars();
  FPModule<K> over = ring->isPolynomialRing() ? mm : restrictScalars(mm, ambientRing(*ring));
  PdResult p = pd(over, n + 1);
  if (!p.isFinite() || p.value() > n) throw InternalError("projective dimension over the ambient ring exceeds its dimension");
  return n - p.value();
}

template <class K>
Depth grade(const Ideal<K>& ideal, const FPModule<K>& m) {
  if (ideal.ring != m.ring()) throw RingMismatch("ideal and module over different rings");
  FPModule<K> mm = minimalize(m);
  if (mm.numGenerators() == 0) return std::nullopt;
  FPModule<K> quotient = FPModule<K>::cyclic(ideal);
  if (isZero(tensor(mm, quotient))) return std::nullopt;
  int top = mm.ring()->dimension() + 1;
  Resolution<K> res = resolve(quotient, top + 1);
  for (int i = 0; i <= top; ++i)
    if (!isZero(extFrom(res, mm, i))) return i;
  throw InternalError("no nonvanishing Ext(R/I, M) up to dim R + 1 although M != IM");
}

#define REFLEX_INSTANTIATE_HOMOLOGY(K)                                                             \
  template struct Resolution<K>;                                                                   \
  template Resolution<K> resolve(const FPModule<K>&, int);                                         \
  template PdResult pd(const FPModule<K>&, int);                                                   \
  template FPModule<K> transpose(const FPModule<K>&);                                              \
  template FPModule<K> syzygyModule(const FPModule<K>&, int);                                      \
  template FPModule<K> tor(const FPModule<K>&, const FPModule<K>&, int, int);                      \
  template FPModule<K> ext(const FPModule<K>&, const FPModule<K>&, int, int);                      \
  template FPModule<K> residueField(const RingPtr<K>&);                                            \
  template Depth depthAuslanderBuchsbaum(const FPModule<K>&);                                                  \
  template Depth depth(const FPModule<K>&);                                                        \
  template Depth grade(const Ideal<K>&, const FPModule<K>&);

REFLEX_INSTANTIATE_HOMOLOGY(GF32003)
REFLEX_INSTANTIATE_HOMOLOGY(Rational)

}  // namespace reflex
