#include <doctest.h>

#include "generators.hpp"

using namespace lagloci;
using lagloci::testing::Gen;

namespace {

BiSeries u1(int n) { return BiSeries::variable(Var::u1, n); }
BiSeries u2(int n) { return BiSeries::variable(Var::u2, n); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidGerm;
}

}  // namespace

TEST_CASE("truncation drops high monomials") {
  const BiSeries x = u1(3);
  BiSeries p = x * x * x * x;
  CHECK(p.is_zero());
  CHECK(p.order() == 3);
  BiSeries s(2);
  s.set_coeff(2, 1, 5);
  CHECK(s.is_zero());
}

TEST_CASE("order propagation and the strict variant") {
  const BiSeries a = u1(5) + BiSeries::constant(1, 5);
  const BiSeries b = u2(3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK(code_of([&] { series_arith(a, b, SeriesOp::add); }) == ErrorCode::OrderMismatch);
  CHECK(series_arith(a, a, SeriesOp::mul) == a * a);
  CHECK(code_of([&] { (void)b.truncated(4); }) == ErrorCode::OrderMismatch);
  CHECK(b.with_order(4).order() == 4);
}

TEST_CASE("inverse of 1 - u1 is the geometric series") {
  const int n = 8;
  const BiSeries inv = series_invert(BiSeries::constant(1, n) - u1(n));
  for (int k = 0; k <= n; ++k) CHECK(inv.coeff(k, 0) == GaussianRational(1));
  CHECK(inv.coeff(0, 1) == GaussianRational(0));
  CHECK(code_of([&] { series_invert(u1(n)); }) == ErrorCode::NotAUnit);
}

TEST_CASE("random units invert exactly") {
  Gen gen(21);
  for (int k = 0; k < 40; ++k) {
    const int n = gen.integer(0, 8);
    BiSeries s = gen.sparse_series(n, 0, n, 6);
    s.set_coeff(0, 0, gen.nonzero_scalar());
    const BiSeries one = BiSeries::constant(1, n);
    CHECK(s * series_invert(s) == one);
    CHECK(series_invert(series_invert(s)) == s);
  }
}

TEST_CASE("ring axioms on random series") {
  Gen gen(22);
  for (int k = 0; k < 60; ++k) {
    const int n = gen.integer(0, 7);
    const BiSeries a = gen.sparse_series(n, 0, n, 5), b = gen.sparse_series(n, 0, n, 5), c = gen.sparse_series(n, 0, n, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("differentiation loses one order and obeys Leibniz") {
  const int n = 6;
  const BiSeries x = u1(n), y = u2(n);
  const BiSeries s = x * x * y + GaussianRational(3) * y * y * y;
  const BiSeries dx = series_diff(s, Var::u1);
  CHECK(dx.order() == n - 1);
  CHECK(dx == GaussianRational(2) * (x * y).truncated(n - 1));
  CHECK(code_of([] { series_diff(BiSeries(0), Var::u1); }) == ErrorCode::OrderExhausted);

  Gen gen(23);
  for (int k = 0; k < 40; ++k) {
    const BiSeries a = gen.sparse_series(n, 0, n, 5), b = gen.sparse_series(n, 0, n, 5);
    for (Var v : {Var::u1, Var::u2}) {
      CHECK(series_diff(a * b, v) == series_diff(a, v) * b + a * series_diff(b, v));
    }
    CHECK(series_diff(series_diff(a, Var::u1), Var::u2) == series_diff(series_diff(a, Var::u2), Var::u1));
  }
}

TEST_CASE("linear substitution is a ring map and composes") {
  Gen gen(24);
  const int n = 6;
  for (int k = 0; k < 20; ++k) {
    const BiSeries a = gen.sparse_series(n, 0, n, 5), b = gen.sparse_series(n, 0, n, 5);
    const GL2 g = gen.group_element();
    auto sub = [&](const BiSeries& s) { return linear_substitute(s, g.g11(), g.g12(), g.g21(), g.g22()); };
    CHECK(sub(a * b) == sub(a) * sub(b));
    CHECK(sub(a + b) == sub(a) + sub(b));
    const GaussianRational inv = inverse(g.det());
    const BiSeries back = linear_substitute(sub(a), g.g22() * inv, -g.g12() * inv, -g.g21() * inv, g.g11() * inv);
    CHECK(back == a);
  }
  const BiSeries s = u1(3);
  const BiSeries t = linear_substitute(s, 2, 5, 0, 1);
  CHECK(t.coeff(1, 0) == GaussianRational(2));
  CHECK(t.coeff(0, 1) == GaussianRational(5));
}

TEST_CASE("valuation and restriction") {
  const int n = 5;
  BiSeries s(n);
  s.set_coeff(2, 1, 3);
  s.set_coeff(4, 0, 1);
  CHECK(s.valuation() == 3);
  const auto r = s.restrict_u2_zero();
  CHECK(r.size() == 1);
  CHECK(r.at(4) == GaussianRational(1));
  CHECK_FALSE(BiSeries(n).valuation().has_value());
}

TEST_CASE("univariate series") {
  UniSeries t = UniSeries::monomial(1, 1, 5);
  const UniSeries p = t * t * t;
  CHECK(p.coeff(3) == GaussianRational(1));
  CHECK(p.derivative().coeff(2) == GaussianRational(3));
  CHECK(p.derivative().order() == 4);
  const BiSeries b = p.as_bi(Var::u2);
  CHECK(b.coeff(0, 3) == GaussianRational(1));
  CHECK(b.order() == 5);
}
