#include <doctest.h>

#include "expect.hpp"
#include "generators.hpp"

using namespace lagloci;
using lagloci::testing::Gen;
using lagloci::testing::code_of;

namespace {

SeriesMatrix random_series_matrix(Gen& gen, std::size_t r, std::size_t c, int n) {
  std::vector<BiSeries> data;
  for (std::size_t k = 0; k < r * c; ++k) data.push_back(gen.sparse_series(n, 0, n, 4));
  return SeriesMatrix(r, c, std::move(data));
}

}  // namespace

TEST_CASE("scalar solve, rank, nullspace, determinant") {
  const ScalarMatrix a = ScalarMatrix::from_rows({{2, 1}, {1, 3}});
  const ScalarMatrix b = ScalarMatrix::from_rows({{3}, {4}});
  const ScalarMatrix x = linear_solve(a, b);
  CHECK(a * x == b);
  CHECK(determinant(a) == GaussianRational(5));
  const ScalarMatrix sing = ScalarMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(sing) == 1);
  const auto ns = nullspace(sing);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    CHECK((sing * ScalarMatrix(3, 1, v)) == ScalarMatrix(2, 1, GaussianRational(0)));
  }
  CHECK(code_of([&] { matrix_inverse(ScalarMatrix::from_rows({{1, 2}, {2, 4}})); }) == ErrorCode::SingularAtOrigin);
}

TEST_CASE("overdetermined systems check the leftover rows") {
  const ScalarMatrix a = ScalarMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
  CHECK(linear_solve(a, ScalarMatrix::from_rows({{1}, {2}, {3}})) == ScalarMatrix::from_rows({{1}, {2}}));
  CHECK(code_of([&] { linear_solve(a, ScalarMatrix::from_rows({{1}, {2}, {4}})); }) == ErrorCode::InconsistentSystem);
  CHECK(code_of([&] { linear_solve(ScalarMatrix::from_rows({{1, 2}, {2, 4}}), ScalarMatrix::from_rows({{1}, {2}})); }) ==
        ErrorCode::RankDeficientAtOrigin);
}

TEST_CASE("random scalar inverses") {
  Gen gen(31);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = gen.integer(1, 4);
    std::vector<GaussianRational> data;
    for (std::size_t i = 0; i < n * n; ++i) data.push_back(gen.scalar());
    const ScalarMatrix m(n, n, data);
    if (determinant(m).is_zero()) continue;
    CHECK(m * matrix_inverse(m) == ScalarMatrix::identity(n, GaussianRational()));
  }
}

TEST_CASE("series matrices over the local ring") {
  Gen gen(32);
  const int n = 5;
  for (int k = 0; k < 25; ++k) {
    SeriesMatrix m = random_series_matrix(gen, 2, 2, n);
    if (det2(at_origin(m)).is_zero()) {
      CHECK(code_of([&] { series_matrix_inverse(m); }) == ErrorCode::SingularAtOrigin);
      continue;
    }
    const SeriesMatrix inv = series_matrix_inverse(m);
    CHECK(m * inv == SeriesMatrix::identity(2, BiSeries(n)));
    CHECK(inv * m == SeriesMatrix::identity(2, BiSeries(n)));
    // Determinant of the inverse is the inverse of the determinant.
    CHECK(det2(inv) * det2(m) == BiSeries::constant(1, n));
  }
}

TEST_CASE("consistent overdetermined series system") {
  Gen gen(33);
  const int n = 4;
  for (int k = 0; k < 15; ++k) {
    SeriesMatrix a = random_series_matrix(gen, 4, 2, n);
    a(0, 0) += BiSeries::constant(1, n);
    a(1, 1) += BiSeries::constant(1, n);
    if (rank(at_origin(a)) < 2) continue;
    const SeriesMatrix x = random_series_matrix(gen, 2, 1, n);
    const SeriesMatrix b = a * x;
    CHECK(series_linear_solve(a, b) == x);
    SeriesMatrix bad = b;
    bad(3, 0) += BiSeries::monomial(1, 1, 1, n);
    // A perturbation in the range of A is still consistent, so test via the residual.
    try {
      const SeriesMatrix y = series_linear_solve(a, bad);
      CHECK(a * y == bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InconsistentSystem);
    }
  }
}
