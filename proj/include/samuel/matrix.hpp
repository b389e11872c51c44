#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "samuel/errors.hpp"
#include "samuel/field.hpp"

namespace samuel {

/// Dense row-major matrix over an exact field.
template <CoefficientField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Builds a matrix from integer rows; all rows must share one length.
  static Matrix from_ints(F field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) fail(ErrorCode::InvalidInput, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<value_type> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  bool is_zero() const {
    for (const auto& v : entries_) {
      if (!field_.is_zero(v)) return false;
    }
    return true;
  }

  Matrix transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidInput, "matrix shape mismatch in product");
    Matrix c(a.field_, a.rows_, b.cols_);
    const F& f = a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::InvalidInput, "matrix shape mismatch in sum");
    Matrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
    return c;
  }

  Matrix scaled(const value_type& s) const {
    Matrix c = *this;
    for (auto& v : c.entries_) v = field_.mul(v, s);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> entries_;
};

/// Reduced row echelon form in place. Pivots are the first nonzero entry in
/// column order and pivot rows are normalized to 1. Returns pivot columns.
template <CoefficientField F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <CoefficientField F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

/// Basis of {v : M v = 0}, one column vector per free column of the RREF.
template <CoefficientField F>
std::vector<Matrix<F>> nullspace(Matrix<F> m) {
  const F& f = m.field();
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Matrix<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix<F> v(f, m.cols(), 1);
    v(free, 0) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = f.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <CoefficientField F>
std::size_t nullity(const Matrix<F>& m) {
  return m.cols() - rank(m);
}

/// Solves a square nonsingular system; throws InvalidInput when singular.
template <CoefficientField F>
std::vector<typename F::value_type> solve(const Matrix<F>& a, const std::vector<typename F::value_type>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) fail(ErrorCode::InvalidInput, "solve needs a square system");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  Matrix<F> aug(a.field(), n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() != n || pivots.back() != n - 1) fail(ErrorCode::InvalidInput, "singular system");
  std::vector<typename F::value_type> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

}  // namespace samuel
