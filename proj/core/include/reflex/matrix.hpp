#ifndef REFLEX_MATRIX_HPP
#define REFLEX_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "reflex/vec.hpp"

namespace reflex {

/// Dense matrix of ring elements. Columns are the images of source
/// generators, rows index target generators.
template <class K>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial<K>::constant(K::one());
    return m;
  }

  /// Builds a matrix from module vectors (component = row index).
  static Matrix fromColumns(std::size_t rows, const std::vector<Vec<K>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      std::vector<std::vector<Term<K>>> parts(rows);
      for (const auto& t : columns[j]) parts.at(t.comp).push_back({t.coef, t.mono, 0});
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = Polynomial<K>(std::move(parts[i]));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial<K>& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial<K>& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Column j as a module vector, sorted in `order` (a rank-`rows` order).
  Vec<K> column(std::size_t j, const ModuleOrder& order) const {
    std::vector<Term<K>> terms;
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& t : (*this)(i, j)) terms.push_back({t.coef, t.mono, static_cast<std::uint32_t>(i)});
    return vec::canonicalize(std::move(terms), order);
  }

  std::vector<Vec<K>> columns(const ModuleOrder& order) const {
    std::vector<Vec<K>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j, order));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix selectColumns(const std::vector<std::size_t>& keep) const {
    Matrix m(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < keep.size(); ++c) m(i, c) = (*this)(i, keep[c]);
    return m;
  }

  Matrix selectRows(const std::vector<std::size_t>& keep) const {
    Matrix m(keep.size(), cols_);
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) m(r, j) = (*this)(keep[r], j);
    return m;
  }

  /// [A | B]; row counts must agree.
  static Matrix concatColumns(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }

  /// Kronecker product with an n x n identity on the right: A (x) I_n.
  Matrix kronIdentityRight(std::size_t n) const {
    Matrix m(rows_ * n, cols_ * n);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t k = 0; k < n; ++k) m(i * n + k, j * n + k) = (*this)(i, j);
    return m;
  }

  /// Kronecker product with an n x n identity on the left: I_n (x) A.
  Matrix kronIdentityLeft(std::size_t n) const {
    Matrix m(rows_ * n, cols_ * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(k * rows_ + i, k * cols_ + j) = (*this)(i, j);
    return m;
  }

  bool hasUnitEntry() const {
    for (const auto& e : entries_)
      if (!e.isZero() && e.lead().mono.isOne()) return true;
    return false;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string toString(const std::vector<std::string>& names) const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) out += ", ";
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += formatPolynomial((*this)(i, j), names);
      }
      out += "]";
    }
    return out + "]";
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial<K>> entries_;
};

}  // namespace reflex

#endif  // REFLEX_MATRIX_HPP
