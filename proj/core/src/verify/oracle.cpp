#include "reflex/verify/oracle.hpp"

#include <map>

#include "reflex/errors.hpp"
#include "reflex/field.hpp"

namespace reflex::verify {

namespace {

void enumerate(int nvars, int var, int left, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = left;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    exps[var] = e;
    enumerate(nvars, var + 1, left - e, exps, out);
  }
  exps[var] = 0;
}

std::vector<int> key(std::uint32_t comp, const Monomial& m, int nvars) {
  std::vector<int> k{static_cast<int>(comp)};
  for (int i = 0; i < nvars; ++i) k.push_back(m[i]);
  return k;
}

// Coordinates of the degree-d piece of a graded free module over S.
struct Piece {
  int nvars = 0;
  std::map<std::vector<int>, std::size_t> index;

  Piece(int n, const std::vector<int>& twists, int d) : nvars(n) {
    for (std::size_t c = 0; c < twists.size(); ++c) {
      if (d - twists[c] < 0) continue;
      for (const auto& m : monomialsOfDegree(n, d - twists[c]))
        index.emplace(key(static_cast<std::uint32_t>(c), m, n), index.size());
    }
  }

  std::size_t size() const { return index.size(); }

  template <class K>
  std::vector<K> coords(const Vec<K>& v, const Monomial& mult) const {
    std::vector<K> out(size(), K::zero());
    for (const auto& t : v) {
      auto it = index.find(key(t.comp, t.mono * mult, nvars));
      if (it == index.end()) throw InternalError("oracle: term outside the graded piece");
      out[it->second] += t.coef;
    }
    return out;
  }
};

// Incremental row echelon form; insert() reports linear independence.
template <class K>
struct Echelon {
  std::vector<std::vector<K>> rows;
  std::vector<std::size_t> pivots;

  void reduce(std::vector<K>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      K c = v[pivots[r]];
      if (c.isZero()) continue;
      for (std::size_t j = pivots[r]; j < v.size(); ++j)
        if (!rows[r][j].isZero()) v[j] -= c * rows[r][j];
    }
  }

  bool insert(std::vector<K> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && v[p].isZero()) ++p;
    if (p == v.size()) return false;
    K inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    // Keep earlier rows reduced at the new pivot so reduce() stays one pass.
    for (auto& row : rows) {
      K c = row[p];
      if (c.isZero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].isZero()) row[j] -= c * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

// Spanning set of (image of A) + J*F0 in degree d.
template <class K>
std::vector<std::vector<K>> relationSpan(const RingPtr<K>& ring, const std::vector<Vec<K>>& cols,
                                         const std::vector<int>& colDegrees,
                                         const std::vector<int>& twists, const Piece& piece, int d) {
  std::vector<std::vector<K>> out;
  int n = ring->nvars();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].isZero() || d - colDegrees[j] < 0) continue;
    for (const auto& m : monomialsOfDegree(n, d - colDegrees[j])) out.push_back(piece.coords(cols[j], m));
  }
  for (const auto& g : ring->definingIdeal()) {
    int dg = g.lead().mono.degree();
    for (std::size_t c = 0; c < twists.size(); ++c) {
      int e = d - twists[c] - dg;
      if (e < 0) continue;
      Vec<K> gc = vec::inComponent(g, static_cast<std::uint32_t>(c));
      for (const auto& m : monomialsOfDegree(n, e)) out.push_back(piece.coords(gc, m));
    }
  }
  return out;
}

}  // namespace

std::vector<Monomial> monomialsOfDegree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars <= 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  enumerate(nvars, 0, d, exps, out);
  return out;
}

template <class K>
bool oracleMember(const Polynomial<K>& f, const Ideal<K>& ideal) {
  if (f.isZero()) return true;
  const auto& ring = ideal.ring;
  ModuleOrder order = ring->polyOrder();
  auto d = vec::homogeneousDegree(f, order);
  if (!d) throw InvalidArgument("oracle membership needs a homogeneous polynomial");
  Piece piece(ring->nvars(), {0}, *d);
  std::vector<Vec<K>> gens;
  std::vector<int> degrees;
  for (const auto& g : ideal.gens) {
    if (g.isZero()) continue;
    gens.push_back(g);
    degrees.push_back(g.lead().mono.degree());
  }
  Echelon<K> ech;
  for (auto& row : relationSpan(ring, gens, degrees, {0}, piece, *d)) ech.insert(std::move(row));
  return !ech.insert(piece.coords(f, Monomial()));
}

template <class K>
std::int64_t oracleHilbertValue(const FPModule<K>& m, int d) {
  Piece piece(m.ring()->nvars(), m.generatorDegrees(), d);
  Echelon<K> ech;
  for (auto& row : relationSpan(m.ring(), m.relations(), m.relationDegrees(), m.generatorDegrees(), piece, d))
    ech.insert(std::move(row));
  return static_cast<std::int64_t>(piece.size() - ech.rows.size());
}

template <class K>
HilbertFunction oracleHilbertFunction(const FPModule<K>& m, int low, int high) {
  HilbertFunction hf;
  hf.low = low;
  for (int d = low; d <= high; ++d) hf.values.push_back(oracleHilbertValue(m, d));
  return hf;
}

template <class K>
std::vector<Vec<K>> oracleSyzygies(const std::vector<Vec<K>>& gens, const std::vector<int>& degrees,
                                   const FreeModule<K>& ambient, int d) {
  const auto& ring = ambient.ring;
  int n = ring->nvars();
  Piece piece(n, ambient.twists, d);
  // Unknowns: coefficient monomials for each generator, then J-multiples.
  struct Unknown {
    std::size_t gen;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  std::vector<std::vector<K>> columns;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (d - degrees[j] < 0) continue;
    for (const auto& m : monomialsOfDegree(n, d - degrees[j])) {
      unknowns.push_back({j, m});
      columns.push_back(piece.coords(gens[j], m));
    }
  }
  std::size_t primary = columns.size();
  for (auto& col : relationSpan(ring, std::vector<Vec<K>>{}, std::vector<int>{}, ambient.twists, piece, d))
    columns.push_back(std::move(col));

  // Reduced row echelon form of the matrix whose columns are `columns`.
  std::size_t rowsN = piece.size(), colsN = columns.size();
  std::vector<std::vector<K>> a(rowsN, std::vector<K>(colsN, K::zero()));
  for (std::size_t c = 0; c < colsN; ++c)
    for (std::size_t r = 0; r < rowsN; ++r) a[r][c] = columns[c][r];
  std::vector<long> pivotOfCol(colsN, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < colsN && rank < rowsN; ++c) {
    std::size_t p = rank;
    while (p < rowsN && a[p][c].isZero()) ++p;
    if (p == rowsN) continue;
    std::swap(a[p], a[rank]);
    K inv = a[rank][c].inverse();
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r = 0; r < rowsN; ++r) {
      if (r == rank || a[r][c].isZero()) continue;
      K f = a[r][c];
      for (std::size_t k = c; k < colsN; ++k) a[r][k] -= f * a[rank][k];
    }
    pivotOfCol[c] = static_cast<long>(rank++);
  }

  FreeModule<K> syzAmbient{ring, degrees};
  ModuleOrder order = syzAmbient.order();
  std::vector<Vec<K>> out;
  for (std::size_t free = 0; free < colsN; ++free) {
    if (pivotOfCol[free] >= 0) continue;
    // Kernel vector: x_free = 1, x_pivot = -a[row][free].
    std::vector<Term<K>> terms;
    auto emit = [&](std::size_t c, const K& v) {
      if (c < primary && !v.isZero())
        terms.push_back({v, unknowns[c].mono, static_cast<std::uint32_t>(unknowns[c].gen)});
    };
    emit(free, K::one());
    for (std::size_t c = 0; c < colsN; ++c)
      if (pivotOfCol[c] >= 0) emit(c, -a[static_cast<std::size_t>(pivotOfCol[c])][free]);
    Vec<K> v = vec::canonicalize(std::move(terms), order);
    std::vector<Term<K>> reduced;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      Polynomial<K> part = ring->reduce(vec::inComponent(vec::component(v, static_cast<std::uint32_t>(j)), 0));
      for (const auto& t : part) reduced.push_back({t.coef, t.mono, static_cast<std::uint32_t>(j)});
    }
    Vec<K> r = vec::canonicalize(std::move(reduced), order);
    if (!r.isZero()) out.push_back(std::move(r));
  }
  return out;
}

#define REFLEX_INSTANTIATE_ORACLE(K)                                                               \
  template bool oracleMember(const Polynomial<K>&, const Ideal<K>&);                               \
  template std::int64_t oracleHilbertValue(const FPModule<K>&, int);                               \
  template HilbertFunction oracleHilbertFunction(const FPModule<K>&, int, int);                    \
  template std::vector<Vec<K>> oracleSyzygies(const std::vector<Vec<K>>&, const std::vector<int>&, \
                                              const FreeModule<K>&, int);

REFLEX_INSTANTIATE_ORACLE(GF32003)
REFLEX_INSTANTIATE_ORACLE(Rational)

}  // namespace reflex::verify
