#include "lagloci/linalg.hpp"

#include <climits>

namespace lagloci {

int min_order(const SeriesMatrix& m) {
  int order = INT_MAX;
  for (const auto& x : m.data()) order = std::min(order, x.order());
  return order;
}

SeriesMatrix truncated(const SeriesMatrix& m, int order) {
  std::vector<BiSeries> data;
  for (const auto& x : m.data()) data.push_back(x.truncated(order));
  return SeriesMatrix(m.rows(), m.cols(), std::move(data));
}

SeriesMatrix uniform(const SeriesMatrix& m) { return truncated(m, min_order(m)); }

SeriesMatrix to_series(const ScalarMatrix& m, int order) {
  std::vector<BiSeries> data;
  for (const auto& x : m.data()) data.push_back(BiSeries::constant(x, order));
  return SeriesMatrix(m.rows(), m.cols(), std::move(data));
}

SeriesMatrix series_matrix_inverse(const SeriesMatrix& m) { return uniform(matrix_inverse(uniform(m))); }

SeriesMatrix series_linear_solve(const SeriesMatrix& a, const SeriesMatrix& b) {
  const int order = std::min(min_order(a), min_order(b));
  return uniform(linear_solve(truncated(a, order), truncated(b, order)));
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(piv, c));
    const GaussianRational inv = inverse(m(row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(ScalarMatrix m) { return rref(m).size(); }

std::vector<std::vector<GaussianRational>> nullspace(const ScalarMatrix& m) {
  ScalarMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

GaussianRational determinant(ScalarMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  GaussianRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(piv, c));
      det = -det;
    }
    det *= m(col, col);
    const GaussianRational inv = inverse(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

}  // namespace lagloci
