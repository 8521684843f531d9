#pragma once

// Dense rational matrices: rank and nullspace by exact Gaussian elimination.

#include "mukaikit/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mukaikit {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw ValidationError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend RationalVector operator*(const Matrix& a, const RationalVector& v) {
    if (a.cols_ != v.size()) throw ValidationError("matrix/vector dimension mismatch");
    RationalVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  std::vector<RationalVector> to_rows() const {
    std::vector<RationalVector> out(rows_, RationalVector(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal concatenation [a | b].
inline Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("hstack: row count mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

/// Reduced row echelon form; pivot columns are appended to `pivots`.
inline Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

inline std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

/// Basis of {x : m·x = 0}. Each vector has a 1 in its free column and is
/// scaled to be integral and primitive with a positive leading entry.
inline std::vector<RationalVector> nullspace(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);

    BigInt lcm = 1;
    for (const auto& x : v) {
      BigInt d = denominator(x);
      lcm = lcm / gcd(lcm, d) * d;
    }
    BigInt g = 0;
    for (auto& x : v) {
      x *= lcm;
      g = gcd(g, numerator(x));
    }
    Rational sign = 1;
    for (const auto& x : v)
      if (x != 0) {
        sign = x < 0 ? -1 : 1;
        break;
      }
    for (auto& x : v) x = x * sign / Rational(g);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// xᵀ·G·y
inline Rational bilinear(const Matrix& g, const RationalVector& x, const RationalVector& y) {
  if (x.size() != g.rows() || y.size() != g.cols()) throw ValidationError("bilinear: vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

}  // namespace mukaikit
