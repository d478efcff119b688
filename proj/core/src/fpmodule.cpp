#include "reflex/fpmodule.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

#include "reflex/errors.hpp"
#include "reflex/field.hpp"

namespace reflex {

namespace {

template <class K>
int degreeOf(const Vec<K>& v, const ModuleOrder& order) {
  auto d = vec::homogeneousDegree(v, order);
  if (!d) throw InvalidArgument("inhomogeneous element");
  return *d;
}

template <class K>
bool isUnit(const Polynomial<K>& p) {
  return p.size() == 1 && p.lead().mono.isOne();
}

// Projects vectors onto their first n components, dropping zero results.
template <class K>
void projectFirst(const std::vector<Vec<K>>& vs, std::size_t n, const ModuleOrder& order,
                  std::vector<Vec<K>>& out, std::vector<int>& degrees) {
  for (const auto& v : vs) {
    std::vector<Term<K>> terms;
    for (const auto& t : v)
      if (t.comp < n) terms.push_back(t);
    Vec<K> p(std::move(terms));
    if (p.isZero()) continue;
    degrees.push_back(degreeOf(p, order));
    out.push_back(std::move(p));
  }
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

template <class K>
Matrix<K> multiply(const QuotientRing<K>& ring, const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> out(a.rows(), b.cols());
  const ModuleOrder& po = ring.polyOrder();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial<K> acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).isZero() && !b(k, j).isZero()) acc = vec::add(acc, vec::mulPoly(a(i, k), b(k, j), po), po);
      out(i, j) = ring.reduce(acc);
    }
  return out;
}

template <class K>
FPModule<K>::FPModule(RingPtr<K> ring, std::vector<int> generatorDegrees,
                      std::vector<int> relationDegrees, Matrix<K> presentation)
    : ring_(std::move(ring)),
      genDegrees_(std::move(generatorDegrees)),
      relDegrees_(std::move(relationDegrees)),
      matrix_(std::move(presentation)) {
  if (matrix_.rows() != genDegrees_.size() || matrix_.cols() != relDegrees_.size())
    throw InvalidArgument("presentation matrix is " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " but the module has " +
                          std::to_string(genDegrees_.size()) + " generators and " +
                          std::to_string(relDegrees_.size()) + " relations");
  const ModuleOrder& po = ring_->polyOrder();
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      Polynomial<K>& e = matrix_(i, j);
      e = ring_->reduce(e);
      if (e.isZero()) continue;
      auto d = vec::homogeneousDegree(e, po);
      if (!d) throw InvalidArgument("presentation entry is not homogeneous: " + ring_->format(e));
      if (*d != relDegrees_[j] - genDegrees_[i])
        throw InvalidArgument("presentation entry (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") has degree " + std::to_string(*d) + ", expected " +
                              std::to_string(relDegrees_[j] - genDegrees_[i]));
    }
}

template <class K>
FPModule<K> FPModule<K>::free(RingPtr<K> ring, std::vector<int> twists) {
  std::size_t n = twists.size();
  return FPModule(std::move(ring), std::move(twists), {}, Matrix<K>(n, 0));
}

template <class K>
FPModule<K> FPModule<K>::zero(RingPtr<K> ring) {
  return FPModule(std::move(ring), {}, {}, Matrix<K>());
}

template <class K>
FPModule<K> FPModule<K>::cyclic(const Ideal<K>& ideal) {
  const ModuleOrder& po = ideal.ring->polyOrder();
  std::vector<Vec<K>> cols;
  std::vector<int> degrees;
  for (const auto& g : ideal.gens) {
    Polynomial<K> r = ideal.ring->reduce(g);
    if (r.isZero()) continue;
    degrees.push_back(degreeOf(r, po));
    cols.push_back(std::move(r));
  }
  return FPModule(ideal.ring, {0}, std::move(degrees), Matrix<K>::fromColumns(1, cols));
}

template <class K>
FPModule<K> FPModule<K>::cokernel(RingPtr<K> ring, Matrix<K> matrix) {
  const ModuleOrder& po = ring->polyOrder();
  std::size_t r = matrix.rows();
  std::size_t c = matrix.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) matrix(i, j) = ring->reduce(matrix(i, j));
  // nodes: rows 0..r-1, columns r..r+c-1; edge weight = entry degree
  std::vector<std::optional<int>> value(r + c);
  auto edgeDegree = [&](std::size_t i, std::size_t j) -> std::optional<int> {
    const auto& e = matrix(i, j);
    if (e.isZero()) return std::nullopt;
    auto d = vec::homogeneousDegree(e, po);
    if (!d) throw InvalidArgument("matrix entry is not homogeneous: " + ring->format(e));
    return d;
  };
  for (std::size_t start = 0; start < r + c; ++start) {
    if (value[start]) continue;
    std::vector<std::size_t> component{start};
    value[start] = 0;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      std::size_t u = todo.front();
      todo.pop();
      bool isRow = u < r;
      std::size_t count = isRow ? c : r;
      for (std::size_t k = 0; k < count; ++k) {
        std::size_t i = isRow ? u : k;
        std::size_t j = isRow ? k : u - r;
        auto d = edgeDegree(i, j);
        if (!d) continue;
        std::size_t v = isRow ? r + j : i;
        int expected = isRow ? *value[u] + *d : *value[u] - *d;
        if (value[v]) {
          if (*value[v] != expected)
            throw InvalidArgument("cannot infer twists: matrix entries have inconsistent degrees");
          continue;
        }
        value[v] = expected;
        component.push_back(v);
        todo.push(v);
      }
    }
    std::optional<int> low;
    for (auto u : component)
      if (u < r) low = low ? std::min(*low, *value[u]) : *value[u];
    if (low)
      for (auto u : component) *value[u] -= *low;
  }
  std::vector<int> gens(r), rels(c);
  for (std::size_t i = 0; i < r; ++i) gens[i] = *value[i];
  for (std::size_t j = 0; j < c; ++j) rels[j] = *value[r + j];
  return FPModule(std::move(ring), std::move(gens), std::move(rels), std::move(matrix));
}

template <class K>
std::string FPModule<K>::toString() const {
  auto list = [](const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(v[i]);
    }
    return out + ")";
  };
  if (genDegrees_.empty()) return "0";
  return "coker " + matrix_.toString(ring_->variables()) + " generators " + list(genDegrees_) +
         " relations " + list(relDegrees_);
}

template <class K>
void requireSameRing(const FPModule<K>& a, const FPModule<K>& b) {
  if (a.ring() != b.ring()) throw RingMismatch("modules over different rings");
}

template <class K>
FPModule<K> minimalize(const FPModule<K>& m) {
  const auto& ring = *m.ring();
  Matrix<K> a = m.presentation();
  std::vector<int> gens = m.generatorDegrees();
  std::vector<int> rels = m.relationDegrees();

  while (true) {
    std::size_t pi = a.rows(), pj = a.cols();
    for (std::size_t i = 0; i < a.rows() && pi == a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (isUnit(a(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == a.rows()) break;
    K inv = a(pi, pj).lead().coef.inverse();
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (l == pj || a(pi, l).isZero()) continue;
      Polynomial<K> factor = vec::scale(a(pi, l), -inv);
      for (std::size_t k = 0; k < a.rows(); ++k)
        if (!a(k, pj).isZero()) a(k, l) = ring.add(a(k, l), ring.mul(factor, a(k, pj)));
    }
    std::vector<std::size_t> keepRows, keepCols;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != pi) keepRows.push_back(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != pj) keepCols.push_back(j);
    a = a.selectRows(keepRows).selectColumns(keepCols);
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pi));
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pj));
  }

  FreeModule<K> target{m.ring(), gens};
  std::vector<Vec<K>> cols = a.columns(target.order());
  std::vector<Vec<K>> nonzero;
  std::vector<int> degrees;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!cols[j].isZero()) {
      nonzero.push_back(cols[j]);
      degrees.push_back(rels[j]);
    }
  std::vector<Vec<K>> kept;
  std::vector<int> keptDegrees;
  for (auto k : minimalGeneratorIndices(nonzero, degrees, target)) {
    kept.push_back(nonzero[k]);
    keptDegrees.push_back(degrees[k]);
  }
  return FPModule<K>(m.ring(), gens, keptDegrees, Matrix<K>::fromColumns(gens.size(), kept));
}

template <class K>
bool isMinimal(const FPModule<K>& m) {
  if (m.presentation().hasUnitEntry()) return false;
  auto cols = m.relations();
  for (const auto& c : cols)
    if (c.isZero()) return false;
  return minimalGeneratorIndices(cols, m.relationDegrees(), m.target()).size() == cols.size();
}

template <class K>
bool isZero(const FPModule<K>& m) {
  return minimalize(m).numGenerators() == 0;
}

template <class K>
std::size_t mu(const FPModule<K>& m) {
  return minimalize(m).numGenerators();
}

template <class K>
bool isFree(const FPModule<K>& m) {
  return minimalize(m).numRelations() == 0;
}

template <class K>
FPModule<K> directSum(const FPModule<K>& a, const FPModule<K>& b) {
  requireSameRing(a, b);
  std::size_t ra = a.numGenerators(), rb = b.numGenerators();
  std::size_t ca = a.numRelations(), cb = b.numRelations();
  Matrix<K> m(ra + rb, ca + cb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j) m(i, j) = a.presentation()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < cb; ++j) m(ra + i, ca + j) = b.presentation()(i, j);
  return FPModule<K>(a.ring(), concat(a.generatorDegrees(), b.generatorDegrees()),
                     concat(a.relationDegrees(), b.relationDegrees()), std::move(m));
}

template <class K>
FPModule<K> shift(const FPModule<K>& m, int a) {
  std::vector<int> gens = m.generatorDegrees(), rels = m.relationDegrees();
  for (auto& d : gens) d -= a;
  for (auto& d : rels) d -= a;
  return FPModule<K>(m.ring(), gens, rels, m.presentation());
}

template <class K>
FPModule<K> tensor(const FPModule<K>& m, const FPModule<K>& n) {
  requireSameRing(m, n);
  std::size_t rm = m.numGenerators(), rn = n.numGenerators();
  std::vector<int> gens, rels;
  for (std::size_t i = 0; i < rm; ++i)
    for (std::size_t k = 0; k < rn; ++k) gens.push_back(m.generatorDegrees()[i] + n.generatorDegrees()[k]);
  for (std::size_t j = 0; j < m.numRelations(); ++j)
    for (std::size_t k = 0; k < rn; ++k) rels.push_back(m.relationDegrees()[j] + n.generatorDegrees()[k]);
  for (std::size_t i = 0; i < rm; ++i)
    for (std::size_t l = 0; l < n.numRelations(); ++l) rels.push_back(m.generatorDegrees()[i] + n.relationDegrees()[l]);
  Matrix<K> block = Matrix<K>::concatColumns(m.presentation().kronIdentityRight(rn),
                                             n.presentation().kronIdentityLeft(rm));
  if (rm * rn == 0) block = Matrix<K>(0, rels.size());
  return minimalize(FPModule<K>(m.ring(), gens, rels, std::move(block)));
}

template <class K>
FPModule<K> hom(const FPModule<K>& m, const FPModule<K>& n) {
  requireSameRing(m, n);
  FPModule<K> mm = minimalize(m);
  FPModule<K> nn = minimalize(n);
  std::size_t r0 = mm.numGenerators(), r1 = mm.numRelations(), rn = nn.numGenerators();
  // Hom(F, N) for F = sum R(-a_i) is sum N(a_i)
  auto homFree = [&](const std::vector<int>& twists) {
    std::vector<int> gens, rels;
    for (int a : twists) {
      for (int b : nn.generatorDegrees()) gens.push_back(b - a);
      for (int d : nn.relationDegrees()) rels.push_back(d - a);
    }
    Matrix<K> block = nn.presentation().kronIdentityLeft(twists.size());
    if (rn == 0) block = Matrix<K>(0, rels.size());
    return FPModule<K>(mm.ring(), gens, rels, std::move(block));
  };
  FPModule<K> h0 = homFree(mm.generatorDegrees());
  FPModule<K> h1 = homFree(mm.relationDegrees());
  Matrix<K> induced = mm.presentation().transpose().kronIdentityRight(rn);
  if (r1 * rn == 0) induced = Matrix<K>(r1 * rn, r0 * rn);
  return kernel(ModuleMap<K>{h0, h1, induced});
}

template <class K>
FPModule<K> dual(const FPModule<K>& m) {
  return hom(m, FPModule<K>::free(m.ring(), {0}));
}

template <class K>
FPModule<K> subquotient(const RingPtr<K>& ring, const std::vector<int>& twists,
                        const Matrix<K>& gens, const std::vector<int>& genDegrees,
                        const Matrix<K>& rels, const std::vector<int>& relDegrees) {
  FreeModule<K> ambient{ring, twists};
  ModuleOrder order = ambient.order();
  std::vector<Vec<K>> all = gens.columns(order);
  for (auto& r : rels.columns(order)) all.push_back(std::move(r));
  std::vector<int> degrees = concat(genDegrees, relDegrees);
  auto syz = syzygies(all, degrees, ambient);
  FreeModule<K> genModule{ring, genDegrees};
  ModuleOrder go = genModule.order();
  std::vector<Vec<K>> relCols;
  std::vector<int> relDegs;
  projectFirst(syz, genDegrees.size(), go, relCols, relDegs);
  return minimalize(FPModule<K>(ring, genDegrees, relDegs, Matrix<K>::fromColumns(genDegrees.size(), relCols)));
}

template <class K>
void validate(const ModuleMap<K>& f) {
  requireSameRing(f.source, f.target);
  const auto& ring = f.source.ring();
  if (f.matrix.rows() != f.target.numGenerators() || f.matrix.cols() != f.source.numGenerators())
    throw InvalidArgument("map matrix shape does not match the modules");
  const ModuleOrder& po = ring->polyOrder();
  for (std::size_t i = 0; i < f.matrix.rows(); ++i)
    for (std::size_t j = 0; j < f.matrix.cols(); ++j) {
      const auto& e = f.matrix(i, j);
      if (ring->reduce(e).isZero()) continue;
      auto d = vec::homogeneousDegree(e, po);
      if (!d || *d != f.source.generatorDegrees()[j] - f.target.generatorDegrees()[i])
        throw InvalidArgument("map entry (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") has the wrong degree");
    }
  Matrix<K> composed = multiply(*ring, f.matrix, f.source.presentation());
  auto gb = buchberger(f.target.relations(), f.target.target());
  for (const auto& col : composed.columns(f.target.target().order()))
    if (!gb.contains(col)) throw InvalidArgument("map is not well defined on the source relations");
}

template <class K>
FPModule<K> kernel(const ModuleMap<K>& f) {
  requireSameRing(f.source, f.target);
  const auto& ring = f.source.ring();
  std::size_t n = f.source.numGenerators();
  if (f.target.numGenerators() == 0) return minimalize(f.source);
  FreeModule<K> g0 = f.target.target();
  ModuleOrder order = g0.order();
  std::vector<Vec<K>> all = f.matrix.columns(order);
  for (auto& r : f.target.relations()) all.push_back(std::move(r));
  auto syz = syzygies(all, concat(f.source.generatorDegrees(), f.target.relationDegrees()), g0);
  std::vector<Vec<K>> pre;
  std::vector<int> preDegrees;
  projectFirst(syz, n, f.source.target().order(), pre, preDegrees);
  return subquotient(ring, f.source.generatorDegrees(), Matrix<K>::fromColumns(n, pre), preDegrees,
                     f.source.presentation(), f.source.relationDegrees());
}

template <class K>
FPModule<K> image(const ModuleMap<K>& f) {
  requireSameRing(f.source, f.target);
  return subquotient(f.source.ring(), f.target.generatorDegrees(), f.matrix, f.source.generatorDegrees(),
                     f.target.presentation(), f.target.relationDegrees());
}

template <class K>
FPModule<K> cokernel(const ModuleMap<K>& f) {
  requireSameRing(f.source, f.target);
  return minimalize(FPModule<K>(f.target.ring(), f.target.generatorDegrees(),
                                concat(f.target.relationDegrees(), f.source.generatorDegrees()),
                                Matrix<K>::concatColumns(f.target.presentation(), f.matrix)));
}

template <class K>
FPModule<K> homologyAt(const FPModule<K>& c, const std::optional<Matrix<K>>& out,
                       const FPModule<K>& cout, const Matrix<K>& in,
                       const std::vector<int>& inDegrees) {
  const auto& ring = c.ring();
  std::size_t n = c.numGenerators();
  if (n == 0) return FPModule<K>::zero(ring);
  Matrix<K> cycles;
  std::vector<int> cycleDegrees;
  if (out && cout.numGenerators() > 0) {
    FreeModule<K> g0 = cout.target();
    std::vector<Vec<K>> all = out->columns(g0.order());
    for (auto& r : cout.relations()) all.push_back(std::move(r));
    auto syz = syzygies(all, concat(c.generatorDegrees(), cout.relationDegrees()), g0);
    std::vector<Vec<K>> pre;
    projectFirst(syz, n, c.target().order(), pre, cycleDegrees);
    cycles = Matrix<K>::fromColumns(n, pre);
  } else {
    cycles = Matrix<K>::identity(n);
    cycleDegrees = c.generatorDegrees();
  }
  Matrix<K> bounds = Matrix<K>::concatColumns(in, c.presentation());
  if (in.cols() == 0) bounds = c.presentation();
  return subquotient(ring, c.generatorDegrees(), cycles, cycleDegrees, bounds,
                     concat(inDegrees, c.relationDegrees()));
}

template <class K>
Ideal<K> minorsIdeal(const RingPtr<K>& ring, const Matrix<K>& a, int t) {
  Ideal<K> out{ring, {}};
  if (t <= 0) return Ideal<K>::unit(ring);
  std::size_t rows = a.rows(), cols = a.cols();
  if (static_cast<std::size_t>(t) > rows || static_cast<std::size_t>(t) > cols) return out;
  if (cols > 63) throw BoundExceeded("minors of matrices with more than 63 columns are not supported");

  std::vector<std::size_t> rowSet(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) rowSet[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  std::vector<Polynomial<K>> found;
  while (true) {
    // det over rows rowSet[0..k-1] and column subset S, by Laplace along row k-1
    std::map<std::uint64_t, Polynomial<K>> level{{0, Polynomial<K>::constant(K::one())}};
    for (int k = 1; k <= t; ++k) {
      std::map<std::uint64_t, Polynomial<K>> next;
      std::size_t r = rowSet[static_cast<std::size_t>(k - 1)];
      for (const auto& [mask, det] : level) {
        if (det.isZero()) continue;
        for (std::size_t c = 0; c < cols; ++c) {
          if (mask & (std::uint64_t{1} << c) || a(r, c).isZero()) continue;
          std::uint64_t full = mask | (std::uint64_t{1} << c);
          // sign: column c's position within `full`, row position k-1
          int pos = std::popcount(full & ((std::uint64_t{1} << c) - 1));
          Polynomial<K> term = ring->mul(a(r, c), det);
          if ((pos + k - 1) % 2 != 0) term = ring->neg(term);
          auto it = next.find(full);
          if (it == next.end()) next.emplace(full, std::move(term));
          else it->second = ring->add(it->second, term);
        }
      }
      level = std::move(next);
    }
    for (auto& [mask, det] : level)
      if (!det.isZero()) found.push_back(det);
    // next row subset in lexicographic order
    int i = t - 1;
    while (i >= 0 && rowSet[static_cast<std::size_t>(i)] == rows - static_cast<std::size_t>(t) + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++rowSet[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) rowSet[static_cast<std::size_t>(j)] = rowSet[static_cast<std::size_t>(j - 1)] + 1;
  }
  out.gens = std::move(found);
  return minimalize(out);
}

template <class K>
Ideal<K> fittingIdeal(const FPModule<K>& m, int j) {
  if (j < 0) return Ideal<K>{m.ring(), {}};
  int t = static_cast<int>(m.numGenerators()) - j;
  return minorsIdeal(m.ring(), m.presentation(), t);
}

template <class K>
Ideal<K> annihilator(const FPModule<K>& m) {
  FPModule<K> mm = minimalize(m);
  return annihilatorOfCokernel(mm.presentation(), mm.target(), mm.relationDegrees());
}

template <class K>
HilbertSeries hilbertSeries(const FPModule<K>& m) {
  int n = m.ring()->nvars();
  if (m.numGenerators() == 0) return HilbertSeries{{}, n};
  auto gb = buchberger(m.relations(), m.target());
  std::vector<std::vector<Monomial>> leads(m.numGenerators());
  for (const auto& g : gb.elements()) leads[g.lead().comp].push_back(g.lead().mono);
  LaurentPoly num;
  for (std::size_t k = 0; k < leads.size(); ++k) {
    LaurentPoly part = monomialIdealNumerator(leads[k]);
    part.shift += m.generatorDegrees()[k];
    num = num + part;
  }
  return HilbertSeries{num, n};
}

template <class K>
HilbertFunction hilbertFunction(const FPModule<K>& m, int maxDegree) {
  int low = 0;
  if (!m.generatorDegrees().empty())
    low = *std::min_element(m.generatorDegrees().begin(), m.generatorDegrees().end());
  return HilbertFunction::fromSeries(hilbertSeries(m), low, std::max(low, maxDegree));
}

template <class K>
int defaultDegreeBound(const FPModule<K>& m) {
  int top = 0;
  if (!m.generatorDegrees().empty())
    top = *std::max_element(m.generatorDegrees().begin(), m.generatorDegrees().end());
  return top + 10;
}

template <class K>
int dimension(const FPModule<K>& m) {
  return hilbertSeries(m).dimension();
}

template <class K>
FPModule<K> restrictScalars(const FPModule<K>& m, const RingPtr<K>& ring) {
  const auto& from = m.ring();
  if (from->variables() != ring->variables() || from->orderKind() != ring->orderKind())
    throw RingMismatch("restriction needs rings over the same variables and order");
  for (const auto& g : ring->definingGb())
    if (!from->reduce(g).isZero())
      throw RingMismatch(from->describe() + " is not a quotient of " + ring->describe());
  const ModuleOrder& po = ring->polyOrder();
  std::vector<Polynomial<K>> extra;
  for (const auto& g : from->definingIdeal()) {
    Polynomial<K> r = ring->reduce(g);
    if (!r.isZero()) extra.push_back(r);
  }
  std::size_t r0 = m.numGenerators();
  std::size_t c0 = m.numRelations();
  Matrix<K> a(r0, c0 + extra.size() * r0);
  std::vector<int> rels = m.relationDegrees();
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < c0; ++j) a(i, j) = m.presentation()(i, j);
  std::size_t col = c0;
  for (const auto& g : extra) {
    int dg = degreeOf(g, po);
    for (std::size_t k = 0; k < r0; ++k) {
      a(k, col++) = g;
      rels.push_back(m.generatorDegrees()[k] + dg);
    }
  }
  return minimalize(FPModule<K>(ring, m.generatorDegrees(), rels, std::move(a)));
}

#define REFLEX_INSTANTIATE_FPMODULE(K)                                                             \
  template Matrix<K> multiply(const QuotientRing<K>&, const Matrix<K>&, const Matrix<K>&);        \
  template class FPModule<K>;                                                                      \
  template void requireSameRing(const FPModule<K>&, const FPModule<K>&);                           \
  template FPModule<K> minimalize(const FPModule<K>&);                                             \
  template bool isMinimal(const FPModule<K>&);                                                     \
  template bool isZero(const FPModule<K>&);                                                        \
  template std::size_t mu(const FPModule<K>&);                                                     \
  template bool isFree(const FPModule<K>&);                                                        \
  template FPModule<K> directSum(const FPModule<K>&, const FPModule<K>&);                          \
  template FPModule<K> shift(const FPModule<K>&, int);                                             \
  template FPModule<K> tensor(const FPModule<K>&, const FPModule<K>&);                             \
  template FPModule<K> hom(const FPModule<K>&, const FPModule<K>&);                                \
  template FPModule<K> dual(const FPModule<K>&);                                                   \
  template FPModule<K> subquotient(const RingPtr<K>&, const std::vector<int>&, const Matrix<K>&,   \
                                   const std::vector<int>&, const Matrix<K>&,                      \
                                   const std::vector<int>&);                                       \
  template void validate(const ModuleMap<K>&);                                                     \
  template FPModule<K> kernel(const ModuleMap<K>&);                                                \
  template FPModule<K> image(const ModuleMap<K>&);                                                 \
  template FPModule<K> cokernel(const ModuleMap<K>&);                                              \
  template FPModule<K> homologyAt(const FPModule<K>&, const std::optional<Matrix<K>>&,             \
                                  const FPModule<K>&, const Matrix<K>&, const std::vector<int>&);  \
  template Ideal<K> minorsIdeal(const RingPtr<K>&, const Matrix<K>&, int);                         \
  template Ideal<K> fittingIdeal(const FPModule<K>&, int);                                         \
  template Ideal<K> annihilator(const FPModule<K>&);                                               \
  template HilbertSeries hilbertSeries(const FPModule<K>&);                                        \
  template HilbertFunction hilbertFunction(const FPModule<K>&, int);                               \
  template int defaultDegreeBound(const FPModule<K>&);                                             \
  template int dimension(const FPModule<K>&);                                                      \
  template FPModule<K> restrictScalars(const FPModule<K>&, const RingPtr<K>&);

REFLEX_INSTANTIATE_FPMODULE(GF32003)
REFLEX_INSTANTIATE_FPMODULE(Rational)

}  // namespace reflex
