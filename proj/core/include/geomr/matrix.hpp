#pragma once

#include <vector>

#include "geomr/errors.hpp"
#include "geomr/exactfield.hpp"

namespace geomr {

// Dense matrix over a commutative ring T. Indices are 1-based throughout the
// library so that formulas read like their matrix-entry definitions.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i - 1) * c_ + (j - 1)]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i - 1) * c_ + (j - 1)];
  }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw InvalidInput("matrix product shape mismatch");
    Matrix out(r_, o.c_);
    for (int i = 1; i <= r_; ++i)
      for (int l = 1; l <= c_; ++l) {
        const T& x = (*this)(i, l);
        if (detail::zero_test(x)) continue;
        for (int j = 1; j <= o.c_; ++j) {
          const T& y = o(l, j);
          if (detail::zero_test(y)) continue;
          out(i, j) += x * y;
        }
      }
    return out;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
  }
  Matrix scaled(const T& s) const {
    Matrix out = *this;
    for (auto& x : out.a_) x = s * x;
    return out;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i + 1, j + 1) = (*this)(rows[i], cols[j]);
    return out;
  }
  Matrix first_columns(int k) const {
    Matrix out(r_, k);
    for (int i = 1; i <= r_; ++i)
      for (int j = 1; j <= k; ++j) out(i, j) = (*this)(i, j);
    return out;
  }
  Matrix transpose() const {
    Matrix out(c_, r_);
    for (int i = 1; i <= r_; ++i)
      for (int j = 1; j <= c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  template <class U, class Fn>
  Matrix<U> map(Fn fn) const {
    Matrix<U> out(r_, c_);
    for (int i = 1; i <= r_; ++i)
      for (int j = 1; j <= c_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// Determinant by Laplace expansion with memoization over column subsets.
// Uses only ring operations, so it works for Laurent-polynomial entries too;
// zero entries are skipped, which keeps sparse loop matrices cheap.
template <class T>
T det(const Matrix<T>& m) {
  const int r = m.rows();
  if (r != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (r == 0) return T(1);
  if (r > 20) throw InvalidInput("determinant size out of range");
  std::vector<T> dp(std::size_t(1) << r, T(0));
  std::vector<char> live(dp.size(), 0);
  dp[0] = T(1);
  live[0] = 1;
  for (unsigned mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask] || detail::zero_test(dp[mask])) continue;
    int row = __builtin_popcount(mask) + 1;
    if (row > r) continue;
    for (int c = 0; c < r; ++c) {
      if (mask & (1u << c)) continue;
      const T& x = m(row, c + 1);
      if (detail::zero_test(x)) continue;
      // Sign counts chosen columns to the right of c (inversions).
      int above = __builtin_popcount(mask >> (c + 1));
      unsigned next = mask | (1u << c);
      T term = x * dp[mask];
      if (above % 2) term = -term;
      dp[next] += term;
      live[next] = 1;
    }
  }
  return dp.back();
}

template <class T>
T minor(const Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw InvalidInput("minor with |I| != |J|");
  return det(m.submatrix(rows, cols));
}

// Row echelon data over a field: rank and pivot columns.
template <class F>
int rank(Matrix<F> m) {
  int r = 0;
  for (int c = 1; c <= m.cols() && r < m.rows(); ++c) {
    int piv = 0;
    for (int i = r + 1; i <= m.rows(); ++i)
      if (!detail::zero_test(m(i, c))) {
        piv = i;
        break;
      }
    if (!piv) continue;
    ++r;
    for (int j = 1; j <= m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (int i = r + 1; i <= m.rows(); ++i) {
      if (detail::zero_test(m(i, c))) continue;
      F f = m(i, c) / m(r, c);
      for (int j = c; j <= m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
  }
  return r;
}

// Basis of the right kernel {x : m x = 0}, returned as the columns of a matrix.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 1; c <= cols && r < rows; ++c) {
    int piv = 0;
    for (int i = r + 1; i <= rows; ++i)
      if (!detail::zero_test(m(i, c))) {
        piv = i;
        break;
      }
    if (!piv) continue;
    ++r;
    for (int j = 1; j <= cols; ++j) std::swap(m(r, j), m(piv, j));
    F inv = F(1) / m(r, c);
    for (int j = 1; j <= cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 1; i <= rows; ++i) {
      if (i == r || detail::zero_test(m(i, c))) continue;
      F f = m(i, c);
      for (int j = 1; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
  }
  std::vector<int> free_cols;
  for (int c = 1, p = 0; c <= cols; ++c) {
    if (p < static_cast<int>(pivots.size()) && pivots[p] == c) {
      ++p;
      continue;
    }
    free_cols.push_back(c);
  }
  Matrix<F> out(cols, static_cast<int>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    out(free_cols[f], f + 1) = F(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) out(pivots[p], f + 1) = -m(p + 1, free_cols[f]);
  }
  return out;
}

}  // namespace geomr
