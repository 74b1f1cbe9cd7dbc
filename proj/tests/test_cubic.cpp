#include <doctest.h>

#include "expect.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace lagloci;
using lagloci::testing::code_of;
using lagloci::testing::Gen;

namespace {

using Q = ScalarQuadratic;
using C = ScalarCubic;
using V = Vec2<GaussianRational>;

bool proportional(const ScalarPluecker& x, const ScalarPluecker& y) {
  const bool y_zero = y.p.is_zero() && y.q.is_zero() && y.r.is_zero();
  if (y_zero) return false;
  return (x.p * y.q - x.q * y.p).is_zero() && (x.p * y.r - x.r * y.p).is_zero() && (x.q * y.r - x.r * y.q).is_zero();
}

/// (l X + m Y)^3.
C cube(const GaussianRational& l, const GaussianRational& m) {
  return {l * l * l, m * m * m, 3 * l * l * m, 3 * l * m * m};
}

/// (l X + m Y)^2 (n X + r Y).
C square_times(const GaussianRational& l, const GaussianRational& m, const GaussianRational& n,
               const GaussianRational& r) {
  return {l * l * n, m * m * r, l * l * r + 2 * l * m * n, m * m * n + 2 * l * m * r};
}

ScalarMatrix phi_of(const Q& q1, const Q& q2) {
  return ScalarMatrix::from_rows({{q1.xx, q2.xx}, {q1.xy, q2.xy}, {q1.yy, q2.yy}});
}

}  // namespace

TEST_CASE("alpha by derivatives") {
  CHECK(alpha_apply(C{1, 0, 0, 0}, V{1, 0}) == Q{3, 0, 0});
  CHECK(alpha_apply(C{0, 0, 1, 0}, V{0, 1}) == Q{1, 0, 0});

  Gen gen(101);
  for (int k = 0; k < 200; ++k) {
    const C f = gen.cubic();
    const C g = gen.cubic();
    const V v{gen.scalar(), gen.scalar()};
    const V w{gen.scalar(), gen.scalar()};
    CHECK(alpha_apply(f, v) == oracle::polarization(f, v.x, v.y));
    CHECK(alpha_apply(f + g, v) == alpha_apply(f, v) + alpha_apply(g, v));
    CHECK(alpha_apply(f, V{v.x + w.x, v.y + w.y}) == alpha_apply(f, v) + alpha_apply(f, w));
  }
}

TEST_CASE("alpha is injective") {
  Gen gen(102);
  for (int k = 0; k < 200; ++k) {
    const C f = gen.nonzero_cubic();
    CHECK(rank(alpha_matrix(f)) > 0);
  }
}

TEST_CASE("degeneracy") {
  CHECK(is_degenerate(C{1, 0, 0, 0}));
  CHECK_FALSE(is_degenerate(C{1, 1, 0, 0}));
  CHECK(is_degenerate(C{1, 1, 3, 3}));
  CHECK(code_of([] { is_degenerate(C{0, 0, 0, 0}); }) == ErrorCode::ZeroCubic);

  Gen gen(103);
  for (int k = 0; k < 200; ++k) {
    const C f = gen.coin(0.3) ? cube(gen.nonzero_scalar(), gen.scalar()) : gen.nonzero_cubic();
    const bool degenerate = is_degenerate(f);
    CHECK(degenerate == oracle::is_cube(f));
    const ScalarPluecker p = chi_hat(f);
    CHECK((p.p.is_zero() && p.q.is_zero() && p.r.is_zero()) == degenerate);
  }
}

TEST_CASE("chi_hat values") {
  CHECK(chi_hat(C{1, 1, 0, 0}) == ScalarPluecker{9, 0, 0});
  CHECK(chi_hat(C{0, 0, 1, 0}) == ScalarPluecker{0, -2, 0});
  CHECK(chi_hat(C{1, 0, 0, 0}) == ScalarPluecker{0, 0, 0});
  CHECK(chi_hat(C{0, 0, 0, 0}) == ScalarPluecker{0, 0, 0});

  Gen gen(104);
  for (int k = 0; k < 200; ++k) {
    const C f = gen.cubic();
    CHECK(chi_hat(f) == oracle::chi_hat_closed_form(f));
  }
}

TEST_CASE("jacobian of chi_hat") {
  CHECK(chi_jacobian(C{1, 1, 0, 0}) == ScalarMatrix::from_rows({{9, 9, 0, 0}, {0, 0, 0, 6}, {0, 0, -6, 0}}));
  CHECK(chi_jacobian(C{0, 0, 1, 0}) == ScalarMatrix::from_rows({{0, 0, 0, -1}, {0, 0, -4, 0}, {0, -6, 0, 0}}));
  CHECK(rank(chi_jacobian(C{1, 1, 0, 0})) == 3);
  CHECK(rank(chi_jacobian(C{0, 0, 1, 0})) == 3);
  CHECK(rank(chi_jacobian(C{1, 0, 0, 0})) == 2);

  // chi_hat is quadratic, so chi_hat(f + d) - chi_hat(f) - chi_hat(d) is the
  // Jacobian at f applied to d.
  Gen gen(105);
  for (int k = 0; k < 100; ++k) {
    const C f = gen.cubic();
    const C d = gen.cubic();
    const auto s = chi_hat(f + d);
    const auto x = chi_hat(f);
    const auto y = chi_hat(d);
    const ScalarMatrix lin = chi_jacobian(f) * ScalarMatrix::from_rows({{d.a}, {d.b}, {d.c}, {d.e}});
    CHECK(lin == ScalarMatrix::from_rows({{s.p - x.p - y.p}, {s.q - x.q - y.q}, {s.r - x.r - y.r}}));
  }
}

TEST_CASE("orbit classification") {
  CHECK(classify_orbit(C{1, 1, 0, 0}) == Orbit::SmoothOrbit);
  CHECK(classify_orbit(C{0, 0, 1, 0}) == Orbit::NodalOrbit);
  CHECK(classify_orbit(C{1, 0, 0, 0}) == Orbit::Degenerate);
  CHECK(classify_orbit(C{0, 1, 0, 0}) == Orbit::Degenerate);
  CHECK(classify_orbit(C{0, 0, 1, 1}) == Orbit::SmoothOrbit);  // XY(X + Y)
  CHECK(code_of([] { classify_orbit(C{0, 0, 0, 0}); }) == ErrorCode::ZeroCubic);

  Gen gen(106);
  int counts[3] = {0, 0, 0};
  for (int k = 0; k < 300; ++k) {
    C f;
    switch (k % 3) {
      case 0: f = gen.nonzero_cubic(); break;
      case 1: f = square_times(gen.nonzero_scalar(), gen.scalar(), gen.scalar(), gen.nonzero_scalar()); break;
      default: f = cube(gen.scalar(), gen.nonzero_scalar()); break;
    }
    if (gen.coin(0.3)) f.a = GaussianRational();
    if (is_zero(f)) continue;
    const Orbit o = classify_orbit(f);
    CHECK(o == oracle::orbit(f));
    ++counts[static_cast<int>(o)];
    const GL2 g = gen.group_element();
    CHECK(classify_orbit(gl2_act(g, f)) == o);
  }
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("resultant detects common roots") {
  using R = std::vector<GaussianRational>;
  CHECK(sylvester_resultant(R{1, -3, 2}, R{1, -1}).is_zero());
  CHECK_FALSE(sylvester_resultant(R{1, -3, 2}, R{1, -5}).is_zero());
  // Res(x - r, x - s) = +-(r - s).
  const auto r = sylvester_resultant(R{1, -2}, R{1, -7});
  CHECK((r == GaussianRational(5) || r == GaussianRational(-5)));
}

TEST_CASE("kappa") {
  CHECK(kappa(C{1, 0, 0, 0}) == Q{1, 0, 0});
  CHECK(kappa(C{1, 1, 3, 3}) == Q{1, 2, 1});
  CHECK(code_of([] { kappa(C{1, 1, 0, 0}); }) == ErrorCode::NotDegenerate);

  Gen gen(107);
  for (int k = 0; k < 100; ++k) {
    const GaussianRational l = gen.scalar();
    const GaussianRational m = gen.scalar();
    if (l.is_zero() && m.is_zero()) continue;
    const C f = cube(l, m);
    const Q q = kappa(f);
    CHECK(discriminant(q).is_zero());
    CHECK(q == projective_normalize(Q{l * l, 2 * l * m, m * m}));
    CHECK(kappa(gen.nonzero_scalar() * f) == q);
  }
}

TEST_CASE("group action") {
  Gen gen(108);
  CHECK(code_of([] { GL2(1, 2, 2, 4); }) == ErrorCode::SingularGroupElement);
  const C f = gen.cubic();
  CHECK(gl2_act(GL2::identity(), f) == f);
  CHECK(gl2_act(GL2(0, 1, 1, 0), C{0, 0, 1, 0}) == C{0, 0, 0, 1});

  for (int k = 0; k < 100; ++k) {
    const GL2 g = gen.group_element();
    const C h = gen.cubic();
    const Q q = gen.quadratic();
    const GaussianRational x = gen.scalar();
    const GaussianRational y = gen.scalar();
    const GaussianRational gx = g.g11() * x + g.g12() * y;
    const GaussianRational gy = g.g21() * x + g.g22() * y;
    CHECK(oracle::evaluate(gl2_act(g, h), x, y) == oracle::evaluate(h, gx, gy));
    CHECK(oracle::evaluate(gl2_act(g, q), x, y) == oracle::evaluate(q, gx, gy));

    // Chain rule: d(h o g)/dX ^ d(h o g)/dY = det(g) (dh/dX o g) ^ (dh/dY o g).
    const auto moved = wedge(gl2_act(g, partial_x(h)), gl2_act(g, partial_y(h)));
    const GaussianRational d = g.det();
    CHECK(chi_hat(gl2_act(g, h)) == ScalarPluecker{d * moved.p, d * moved.q, d * moved.r});
    CHECK(chi_hat(gl2_act(g, h)) == wedge_action(g, chi_hat(h)));

    CHECK(discriminant(gl2_act(g, q)) == d * d * discriminant(q));
  }
}

TEST_CASE("discriminant values") {
  CHECK(discriminant(Q{1, 0, 0}) == GaussianRational(0));
  CHECK(discriminant(Q{0, 1, 0}) == GaussianRational(1));
  CHECK(discriminant(Q{1, 2, 1}) == GaussianRational(0));
}

TEST_CASE("solution modules of the fiber system") {
  const auto m1 = solution_module(Q{1, 0, 0}, Q{0, 0, 1});
  CHECK(m1.basis[0] == C{1, 0, 0, 0});
  CHECK(m1.basis[1] == C{0, 1, 0, 0});
  const auto m2 = solution_module(Q{0, 1, 0}, Q{1, 0, 0});
  CHECK(m2.basis[0] == C{1, 0, 0, 0});
  CHECK(m2.basis[1] == C{0, 0, 1, 0});
  const auto m3 = solution_module(Q{1, 0, 1}, Q{0, 1, 0});
  CHECK(m3.basis[0] == C{1, 0, 0, 3});
  CHECK(m3.basis[1] == C{0, 1, 3, 0});
  CHECK(code_of([] { solution_module(Q{1, 0, 0}, Q{2, 0, 0}); }) == ErrorCode::SolutionSpaceNotRank2);
}

TEST_CASE("fiber basis") {
  const FiberBasis fb = fiber_basis(TwoPlane{Q{1, 0, 0}, Q{0, 0, 1}});
  CHECK(fb.first == C{1, 1, 0, 0});
  CHECK(fb.second == C{1, -1, 0, 0});

  Gen gen(109);
  for (int k = 0; k < 100; ++k) {
    const TwoPlane plane{gen.quadratic(), gen.quadratic()};
    if (rank(phi_of(plane.span1, plane.span2)) < 2) continue;
    const FiberBasis b = fiber_basis(plane);
    for (const C& f : {b.first, b.second}) {
      CHECK_FALSE(is_degenerate(f));
      CHECK(proportional(chi_hat(f), plane.pluecker()));
      // Both derivatives lie in the plane.
      for (const Q& d : {partial_x(f), partial_y(f)}) {
        CHECK(rank(ScalarMatrix::from_rows({{plane.span1.xx, plane.span2.xx, d.xx},
                                            {plane.span1.xy, plane.span2.xy, d.xy},
                                            {plane.span1.yy, plane.span2.yy, d.yy}})) == 2);
      }
    }
    const auto k1 = b.first.coeffs();
    const auto k2 = b.second.coeffs();
    CHECK(rank(ScalarMatrix::from_rows({{k1[0], k1[1], k1[2], k1[3]}, {k2[0], k2[1], k2[2], k2[3]}})) == 2);
  }
}

TEST_CASE("xi") {
  const ScalarMatrix phi = phi_of(Q{3, 0, 0}, Q{0, 0, 3});
  CHECK(xi_scalar(C{1, 1, 0, 0}, phi) == ScalarMatrix::from_rows({{1, 0}, {0, 1}}));
  const GaussianRational c(Rational(2, 3));
  const GaussianRational e(GaussianRational(1, -1));
  CHECK(xi_scalar(C{c, e, 0, 0}, phi) == ScalarMatrix::from_rows({{inverse(c), 0}, {0, inverse(e)}}));
  CHECK(code_of([&] { xi_scalar(C{1, 1, 0, 0}, phi_of(Q{0, 1, 0}, Q{0, 0, 1})); }) == ErrorCode::InconsistentSystem);

  Gen gen(110);
  for (int k = 0; k < 100; ++k) {
    const TwoPlane plane{gen.quadratic(), gen.quadratic()};
    const ScalarMatrix p = phi_of(plane.span1, plane.span2);
    if (rank(p) < 2) continue;
    const FiberBasis b = fiber_basis(plane);
    const C f = gen.nonzero_scalar() * b.first + gen.scalar() * b.second;
    if (is_degenerate(f)) continue;
    const ScalarMatrix x = xi_scalar(f, p);
    CHECK(alpha_matrix(f) * x == p);
    CHECK_FALSE(determinant(x).is_zero());
    const GaussianRational s = gen.nonzero_scalar();
    CHECK(xi_scalar(s * f, p) == inverse(s) * x);

    // Equal xi forces equal cubics.
    const C g = gen.coin() ? f : gen.nonzero_scalar() * b.first + gen.scalar() * b.second;
    if (is_degenerate(g)) continue;
    CHECK((xi_scalar(g, p) == x) == (g == f));
  }
}

TEST_CASE("combining xi") {
  // Smooth normal form: f = X^3 + Y^3, ft = c X^3 + e Y^3.
  const ScalarMatrix phi1 = phi_of(Q{3, 0, 0}, Q{0, 0, 3});
  const auto r1 = combine_xi(C{1, 1, 0, 0}, C{1, 2, 0, 0}, 1, 1, phi1);
  CHECK(r1.b == GaussianRational(Rational(1, 3)));
  CHECK(r1.btilde == GaussianRational(Rational(1, 6)));
  const auto id = combine_xi(C{1, 1, 0, 0}, C{1, 2, 0, 0}, 1, 0, phi1);
  CHECK(id.b == GaussianRational(1));
  CHECK(id.btilde == GaussianRational(0));

  // Nodal normal form: f = X^2 Y, ft = X^3 + e X^2 Y.
  const ScalarMatrix phi2 = phi_of(Q{0, 2, 0}, Q{1, 0, 0});
  const auto r2 = combine_xi(C{0, 0, 1, 0}, C{1, 0, 1, 0}, 1, 1, phi2);
  CHECK(r2.b == GaussianRational(Rational(1, 4)));
  CHECK(r2.btilde == GaussianRational(Rational(1, 4)));

  CHECK(code_of([&] { combine_xi(C{1, 1, 0, 0}, C{2, 2, 0, 0}, 2, -4, phi1); }) == ErrorCode::NotAnIsomorphism);

  Gen gen(111);
  for (int k = 0; k < 100; ++k) {
    const GaussianRational a = gen.scalar();
    const GaussianRational at = gen.scalar();
    const GaussianRational c = gen.nonzero_scalar();
    const GaussianRational e = gen.nonzero_scalar();
    if (c == e || (c * a + at).is_zero() || (e * a + at).is_zero()) continue;
    const auto got = combine_xi(C{1, 1, 0, 0}, C{c, e, 0, 0}, a, at, phi1);
    const auto want = oracle::case1_solution(a, at, c, e);
    CHECK(got.b == want[0]);
    CHECK(got.btilde == want[1]);
  }
  for (int k = 0; k < 100; ++k) {
    const GaussianRational a = gen.scalar();
    const GaussianRational at = gen.scalar();
    const GaussianRational e = gen.nonzero_scalar();
    if ((a * e + at).is_zero()) continue;
    const auto got = combine_xi(C{0, 0, 1, 0}, C{1, 0, e, 0}, a, at, phi2);
    const auto want = oracle::case2_solution(a, at, e);
    CHECK(got.b == want[0]);
    CHECK(got.btilde == want[1]);
  }

  // General planes: recompute xi of the combination directly.
  for (int k = 0; k < 100; ++k) {
    const TwoPlane plane{gen.quadratic(), gen.quadratic()};
    const ScalarMatrix p = phi_of(plane.span1, plane.span2);
    if (rank(p) < 2) continue;
    const FiberBasis fb = fiber_basis(plane);
    const GaussianRational a = gen.scalar();
    const GaussianRational at = gen.scalar();
    const ScalarMatrix z = a * xi_scalar(fb.first, p) + at * xi_scalar(fb.second, p);
    if (determinant(z).is_zero()) continue;
    const auto r = combine_xi(fb.first, fb.second, a, at, p);
    CHECK(xi_scalar(r.b * fb.first + r.btilde * fb.second, p) == z);
  }
}

TEST_CASE("zeta pair") {
  const ZetaPair zp = zeta_pair(C{1, 0, 0, 0}, phi_of(Q{0, 0, 0}, Q{6, 0, 0}));
  CHECK(zp.zeta == ScalarMatrix::from_rows({{0, 2}, {1, 0}}));
  CHECK(zp.zeta_tilde == ScalarMatrix::from_rows({{0, 2}, {2, 0}}));
  CHECK(zp.scale == GaussianRational(2));

  CHECK(code_of([] { zeta_pair(C{1, 0, 0, 0}, phi_of(Q{0, 0, 0}, Q{0, 0, 1})); }) == ErrorCode::WrongKappaImage);
  CHECK(code_of([] { zeta_pair(C{1, 0, 0, 0}, phi_of(Q{1, 0, 0}, Q{0, 0, 1})); }) == ErrorCode::RankMismatch);
  CHECK(code_of([] { zeta_pair(C{1, 1, 0, 0}, phi_of(Q{0, 0, 0}, Q{1, 0, 0})); }) == ErrorCode::NotDegenerate);

  Gen gen(112);
  for (int k = 0; k < 100; ++k) {
    const GaussianRational l = gen.scalar();
    const GaussianRational m = gen.scalar();
    const GaussianRational r1 = gen.scalar();
    const GaussianRational r2 = gen.scalar();
    if ((l.is_zero() && m.is_zero()) || (r1.is_zero() && r2.is_zero())) continue;
    const C f = gen.nonzero_scalar() * cube(l, m);
    const Q sq{l * l, 2 * l * m, m * m};
    const ScalarMatrix phi = phi_of(r1 * sq, r2 * sq);
    const ZetaPair z = zeta_pair(f, phi);
    CHECK(alpha_matrix(f) * z.zeta == phi);
    CHECK(alpha_matrix(f) * z.zeta_tilde == phi);
    CHECK_FALSE(determinant(z.zeta).is_zero());
    CHECK_FALSE(determinant(z.zeta_tilde).is_zero());
    const auto& u = z.zeta.data();
    const auto& v = z.zeta_tilde.data();
    CHECK(rank(ScalarMatrix::from_rows({{u[0], u[1], u[2], u[3]}, {v[0], v[1], v[2], v[3]}})) == 2);

    const GaussianRational a = gen.scalar();
    const GaussianRational at = gen.scalar();
    if ((a + at).is_zero()) continue;
    CHECK(alpha_matrix(inverse(a + at) * f) * (a * z.zeta + at * z.zeta_tilde) == phi);
  }
}
