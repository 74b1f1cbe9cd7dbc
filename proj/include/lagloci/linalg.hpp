#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagloci/series.hpp"

namespace lagloci {

/// Dense row-major matrix over a coefficient ring R, where R is either
/// GaussianRational (a field) or BiSeries (a local ring: units are exactly
/// the elements with a nonzero constant term).
template <class R>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  /// Rows from a nested initializer, e.g. {{1, 0}, {0, 1}}.
  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    std::vector<R> data;
    for (const auto& r : rows) data.insert(data.end(), r.begin(), r.end());
    return Matrix(rows.size(), rows.empty() ? 0 : rows.front().size(), std::move(data));
  }

  static Matrix identity(std::size_t n, const R& like) {
    Matrix m(n, n, zero_like(like));
    for (std::size_t k = 0; k < n; ++k) m(k, k) = one_like(like);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<R> column(std::size_t c) const {
    std::vector<R> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void set_column(std::size_t c, const std::vector<R>& values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  const std::vector<R>& data() const noexcept { return data_; }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    std::vector<R> data;
    data.reserve(a.rows_ * b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < b.cols_; ++c) {
        R acc = a(r, 0) * b(0, c);
        for (std::size_t k = 1; k < a.cols_; ++k) acc += a(r, k) * b(k, c);
        data.push_back(std::move(acc));
      }
    }
    return Matrix(a.rows_, b.cols_, std::move(data));
  }
  friend Matrix operator*(const R& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<R> data_;
};

using ScalarMatrix = Matrix<GaussianRational>;
using SeriesMatrix = Matrix<BiSeries>;

/// Entrywise constant term.
template <class R>
ScalarMatrix at_origin(const Matrix<R>& m) {
  std::vector<GaussianRational> data;
  for (const auto& x : m.data()) data.push_back(constant_term(x));
  return ScalarMatrix(m.rows(), m.cols(), std::move(data));
}

/// Lowest truncation order among the entries of a series matrix.
int min_order(const SeriesMatrix& m);
/// Every entry truncated to the common (minimum) order.
SeriesMatrix uniform(const SeriesMatrix& m);
SeriesMatrix truncated(const SeriesMatrix& m, int order);
/// Entrywise scalar promotion to constant series of the given order.
SeriesMatrix to_series(const ScalarMatrix& m, int order);

template <class R>
Matrix<R> transpose(const Matrix<R>& m) {
  std::vector<R> data;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) data.push_back(m(r, c));
  }
  return Matrix<R>(m.cols(), m.rows(), std::move(data));
}

template <class R>
R det2(const Matrix<R>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class R>
R det3(const std::vector<R>& c0, const std::vector<R>& c1, const std::vector<R>& c2) {
  return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
         c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

/// Solves A X = B with A of size m x k whose value at the origin has rank k.
/// Gauss-Jordan elimination with unit pivots: over Q(i) this is ordinary
/// elimination, over truncated series every pivot is invertible because its
/// constant term is nonzero. Rows left over after k pivots must reduce to
/// exact zero on the right-hand side, otherwise the system is inconsistent.
template <class R>
Matrix<R> linear_solve(Matrix<R> a, Matrix<R> b) {
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  const std::size_t r = b.cols();
  if (b.rows() != m) throw Error(ErrorCode::OrderMismatch, "linear_solve: row counts differ");
  std::vector<std::size_t> pivot_row(k);
  std::vector<bool> used(m, false);
  for (std::size_t col = 0; col < k; ++col) {
    std::optional<std::size_t> piv;
    for (std::size_t row = 0; row < m; ++row) {
      if (!used[row] && !constant_term(a(row, col)).is_zero()) {
        piv = row;
        break;
      }
    }
    if (!piv) {
      throw Error(ErrorCode::RankDeficientAtOrigin,
                  "coefficient matrix has rank < " + std::to_string(k) + " at the origin");
    }
    used[*piv] = true;
    pivot_row[col] = *piv;
    const R inv = unit_inverse(a(*piv, col));
    for (std::size_t c = 0; c < k; ++c) a(*piv, c) = inv * a(*piv, c);
    for (std::size_t c = 0; c < r; ++c) b(*piv, c) = inv * b(*piv, c);
    for (std::size_t row = 0; row < m; ++row) {
      if (row == *piv || is_exact_zero(a(row, col))) continue;
      const R factor = a(row, col);
      for (std::size_t c = 0; c < k; ++c) a(row, c) -= factor * a(*piv, c);
      for (std::size_t c = 0; c < r; ++c) b(row, c) -= factor * b(*piv, c);
    }
  }
  for (std::size_t row = 0; row < m; ++row) {
    if (used[row]) continue;
    for (std::size_t c = 0; c < r; ++c) {
      if (!is_exact_zero(b(row, c))) {
        throw Error(ErrorCode::InconsistentSystem,
                    "equation " + std::to_string(row) + " has a nonzero residual at order " +
                        std::to_string(leading_order(b(row, c))));
      }
    }
  }
  std::vector<R> data;
  data.reserve(k * r);
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t c = 0; c < r; ++c) data.push_back(b(pivot_row[col], c));
  }
  return Matrix<R>(k, r, std::move(data));
}

/// Inverse of a square matrix whose determinant is a unit.
template <class R>
Matrix<R> matrix_inverse(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::SingularAtOrigin, "matrix is not square");
  try {
    return linear_solve(m, Matrix<R>::identity(m.rows(), m(0, 0)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::RankDeficientAtOrigin) {
      throw Error(ErrorCode::SingularAtOrigin, "determinant vanishes at the origin");
    }
    throw;
  }
}

SeriesMatrix series_matrix_inverse(const SeriesMatrix& m);
SeriesMatrix series_linear_solve(const SeriesMatrix& a, const SeriesMatrix& b);

// Field-only helpers for scalar matrices.
std::size_t rank(ScalarMatrix m);
/// Basis of {x : M x = 0} read off the reduced row echelon form: one vector
/// per free column, with that free entry equal to 1.
std::vector<std::vector<GaussianRational>> nullspace(const ScalarMatrix& m);
GaussianRational determinant(ScalarMatrix m);

}  // namespace lagloci
