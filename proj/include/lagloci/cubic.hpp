#pragma once

#include <array>
#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "lagloci/linalg.hpp"

namespace lagloci {

/// qxx X^2 + qxy XY + qyy Y^2. `xy` is the full XY coefficient, not its half.
template <class R>
struct BinaryQuadratic {
  R xx, xy, yy;

  friend BinaryQuadratic operator+(const BinaryQuadratic& l, const BinaryQuadratic& r) {
    return {l.xx + r.xx, l.xy + r.xy, l.yy + r.yy};
  }
  friend BinaryQuadratic operator-(const BinaryQuadratic& l, const BinaryQuadratic& r) {
    return {l.xx - r.xx, l.xy - r.xy, l.yy - r.yy};
  }
  friend BinaryQuadratic operator*(const R& s, const BinaryQuadratic& q) { return {s * q.xx, s * q.xy, s * q.yy}; }
  friend bool operator==(const BinaryQuadratic& l, const BinaryQuadratic& r) {
    return l.xx == r.xx && l.xy == r.xy && l.yy == r.yy;
  }
  std::vector<R> column() const { return {xx, xy, yy}; }
  static BinaryQuadratic from_column(const std::vector<R>& c) { return {c[0], c[1], c[2]}; }
};

/// a X^3 + b Y^3 + c X^2 Y + e X Y^2, in exactly this coefficient order.
template <class R>
struct BinaryCubic {
  R a, b, c, e;

  friend BinaryCubic operator+(const BinaryCubic& l, const BinaryCubic& r) {
    return {l.a + r.a, l.b + r.b, l.c + r.c, l.e + r.e};
  }
  friend BinaryCubic operator-(const BinaryCubic& l, const BinaryCubic& r) {
    return {l.a - r.a, l.b - r.b, l.c - r.c, l.e - r.e};
  }
  friend BinaryCubic operator*(const R& s, const BinaryCubic& f) { return {s * f.a, s * f.b, s * f.c, s * f.e}; }
  friend bool operator==(const BinaryCubic& l, const BinaryCubic& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.e == r.e;
  }
  std::array<R, 4> coeffs() const { return {a, b, c, e}; }
  static BinaryCubic from_coeffs(const std::array<R, 4>& k) { return {k[0], k[1], k[2], k[3]}; }
};

/// Tangent vector x d/dX + y d/dY of V.
template <class R>
struct Vec2 {
  R x, y;
};

/// Coordinates on the second exterior power of quadratic forms, in the basis
/// (X^2 ^ Y^2, X^2 ^ XY, Y^2 ^ XY).
template <class R>
struct Pluecker {
  R p, q, r;
  friend bool operator==(const Pluecker& l, const Pluecker& o) { return l.p == o.p && l.q == o.q && l.r == o.r; }
};

template <class R>
  requires(!std::same_as<R, GaussianRational>)
BinaryQuadratic<R> operator*(const GaussianRational& s, const BinaryQuadratic<R>& q) {
  return {s * q.xx, s * q.xy, s * q.yy};
}

template <class R>
  requires(!std::same_as<R, GaussianRational>)
BinaryCubic<R> operator*(const GaussianRational& s, const BinaryCubic<R>& f) {
  return {s * f.a, s * f.b, s * f.c, s * f.e};
}

using ScalarQuadratic = BinaryQuadratic<GaussianRational>;
using ScalarCubic = BinaryCubic<GaussianRational>;
using SeriesQuadratic = BinaryQuadratic<BiSeries>;
using SeriesCubic = BinaryCubic<BiSeries>;
using ScalarPluecker = Pluecker<GaussianRational>;

// A homomorphism W -> V as a 2 x 2 matrix whose columns are the images of
// the basis vectors of W in (d/dX, d/dY) coordinates.
template <class R>
using TangentMap = Matrix<R>;

/// Invertible 2x2 matrix acting on (X, Y) by linear substitution.
class GL2 {
 public:
  GL2(GaussianRational g11, GaussianRational g12, GaussianRational g21, GaussianRational g22);
  static GL2 identity() { return GL2(1, 0, 0, 1); }

  const GaussianRational& g11() const { return m_[0]; }
  const GaussianRational& g12() const { return m_[1]; }
  const GaussianRational& g21() const { return m_[2]; }
  const GaussianRational& g22() const { return m_[3]; }
  GaussianRational det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

 private:
  std::array<GaussianRational, 4> m_;
};

struct TwoPlane {
  ScalarQuadratic span1, span2;
  ScalarPluecker pluecker() const;
};

enum class Orbit { SmoothOrbit, NodalOrbit, Degenerate };
const char* to_string(Orbit o);

template <class R>
BinaryCubic<GaussianRational> at_origin(const BinaryCubic<R>& f) {
  return {constant_term(f.a), constant_term(f.b), constant_term(f.c), constant_term(f.e)};
}

template <class R>
BinaryQuadratic<GaussianRational> at_origin(const BinaryQuadratic<R>& q) {
  return {constant_term(q.xx), constant_term(q.xy), constant_term(q.yy)};
}

template <class R>
BinaryQuadratic<R> partial_x(const BinaryCubic<R>& f) {
  return {GaussianRational(3) * f.a, GaussianRational(2) * f.c, f.e};
}

template <class R>
BinaryQuadratic<R> partial_y(const BinaryCubic<R>& f) {
  return {f.c, GaussianRational(2) * f.e, GaussianRational(3) * f.b};
}

/// alpha^f(v) = v_X df/dX + v_Y df/dY, which equals 3 f(v, ., .).
template <class R>
BinaryQuadratic<R> alpha_apply(const BinaryCubic<R>& f, const Vec2<R>& v) {
  return v.x * partial_x(f) + v.y * partial_y(f);
}

/// 3 x 2 matrix of alpha^f: columns alpha^f(d/dX), alpha^f(d/dY) in
/// (X^2, XY, Y^2) coefficients.
template <class R>
Matrix<R> alpha_matrix(const BinaryCubic<R>& f) {
  const auto dx = partial_x(f);
  const auto dy = partial_y(f);
  return Matrix<R>::from_rows({{dx.xx, dy.xx}, {dx.xy, dy.xy}, {dx.yy, dy.yy}});
}

template <class R>
Pluecker<R> wedge(const BinaryQuadratic<R>& l, const BinaryQuadratic<R>& r) {
  return {l.xx * r.yy - l.yy * r.xx, l.xx * r.xy - l.xy * r.xx, l.yy * r.xy - l.xy * r.yy};
}

/// df/dX ^ df/dY; equals (9ab - ce, 6ae - 2c^2, 2e^2 - 6bc).
template <class R>
Pluecker<R> chi_hat(const BinaryCubic<R>& f) {
  return wedge(partial_x(f), partial_y(f));
}

/// qxy^2 - 4 qxx qyy; vanishes exactly on perfect squares.
template <class R>
R discriminant(const BinaryQuadratic<R>& q) {
  return q.xy * q.xy - GaussianRational(4) * (q.xx * q.yy);
}

/// xi^f: the unique map W -> V with alpha^f o xi^f = phi, where phi is the
/// 3 x 2 matrix of quadratic coefficients of phi(w1), phi(w2).
template <class R>
TangentMap<R> xi_of(const BinaryCubic<R>& f, const Matrix<R>& phi) {
  return linear_solve(alpha_matrix(f), phi);
}

/// The 6 x 2 system in (b, bt) expressing alpha^{b f + bt ft}(Z w_k) = phi(w_k),
/// k = 1, 2: rows 3k..3k+2 hold [alpha^f(Z w_k) | alpha^{ft}(Z w_k)].
template <class R>
std::pair<Matrix<R>, Matrix<R>> combination_system(const BinaryCubic<R>& f, const BinaryCubic<R>& ft,
                                                   const TangentMap<R>& z, const Matrix<R>& phi) {
  std::vector<R> a;
  std::vector<R> rhs;
  for (std::size_t k = 0; k < 2; ++k) {
    const Vec2<R> w{z(0, k), z(1, k)};
    const auto lf = alpha_apply(f, w).column();
    const auto lft = alpha_apply(ft, w).column();
    for (std::size_t row = 0; row < 3; ++row) {
      a.push_back(lf[row]);
      a.push_back(lft[row]);
      rhs.push_back(phi(row, k));
    }
  }
  return {Matrix<R>(6, 2, std::move(a)), Matrix<R>(6, 1, std::move(rhs))};
}

/// Kernel basis of the fiber system {det[Q1, Q2, df/dX] = 0, det[Q1, Q2, df/dY] = 0}
/// in the unknowns (a, b, c, e). Pivots are chosen at the origin scanning the
/// columns from e back to a, so the leading coefficients are the free ones;
/// `basis[k]` has free column `free_columns[k]` equal to 1.
template <class R>
struct SolutionModule {
  std::array<BinaryCubic<R>, 2> basis;
  std::array<std::size_t, 2> free_columns;
};

std::array<std::size_t, 2> fiber_pivot_columns(const ScalarMatrix& system_at_origin);

template <class R>
Matrix<R> fiber_system(const BinaryQuadratic<R>& q1, const BinaryQuadratic<R>& q2) {
  const R n1 = q1.xy * q2.yy - q1.yy * q2.xy;
  const R n2 = q1.yy * q2.xx - q1.xx * q2.yy;
  const R n3 = q1.xx * q2.xy - q1.xy * q2.xx;
  const R zero = zero_like(n1);
  const GaussianRational two(2);
  const GaussianRational three(3);
  return Matrix<R>::from_rows({{three * n1, zero, two * n2, n3}, {zero, three * n3, n1, two * n2}});
}

template <class R>
SolutionModule<R> solution_module(const BinaryQuadratic<R>& q1, const BinaryQuadratic<R>& q2) {
  const Matrix<R> m = fiber_system(q1, q2);
  const auto pivots = fiber_pivot_columns(at_origin(m));
  std::array<std::size_t, 2> free{};
  std::size_t nf = 0;
  for (std::size_t col = 0; col < 4; ++col) {
    if (col != pivots[0] && col != pivots[1]) free[nf++] = col;
  }
  Matrix<R> a(2, 2, m(0, 0));
  for (std::size_t row = 0; row < 2; ++row) {
    a(row, 0) = m(row, pivots[0]);
    a(row, 1) = m(row, pivots[1]);
  }
  std::vector<BinaryCubic<R>> basis;
  for (std::size_t k = 0; k < 2; ++k) {
    Matrix<R> rhs(2, 1, m(0, 0));
    for (std::size_t row = 0; row < 2; ++row) rhs(row, 0) = -m(row, free[k]);
    const Matrix<R> x = linear_solve(a, rhs);
    std::array<R, 4> coeffs{zero_like(m(0, 0)), zero_like(m(0, 0)), zero_like(m(0, 0)), zero_like(m(0, 0))};
    coeffs[free[k]] = one_like(m(0, 0));
    coeffs[pivots[0]] = x(0, 0);
    coeffs[pivots[1]] = x(1, 0);
    basis.push_back(BinaryCubic<R>::from_coeffs(coeffs));
  }
  return SolutionModule<R>{{basis[0], basis[1]}, free};
}

/// Deterministic list of small rational parameter pairs used to pick
/// elements t1 k1 + t2 k2 of a solution module.
const std::vector<std::array<GaussianRational, 2>>& fiber_parameter_candidates();

template <class R>
struct FiberChoice {
  BinaryCubic<R> first, second;
  std::array<std::size_t, 2> candidate_index;
};

bool is_degenerate(const ScalarCubic& f);

/// The `attempt`-th pair (in lexicographic candidate order) of module
/// elements that are nondegenerate at the origin and mutually independent.
template <class R>
FiberChoice<R> select_fiber_pair(const SolutionModule<R>& module, std::size_t attempt = 0) {
  const auto& cands = fiber_parameter_candidates();
  auto combo = [&](std::size_t i) {
    return cands[i][0] * module.basis[0] + cands[i][1] * module.basis[1];
  };
  auto admissible = [&](std::size_t i) {
    const auto f0 = at_origin(combo(i));
    const bool zero = f0.a.is_zero() && f0.b.is_zero() && f0.c.is_zero() && f0.e.is_zero();
    return !zero && !is_degenerate(f0);
  };
  std::vector<bool> ok(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) ok[i] = admissible(i);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!ok[i]) continue;
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (!ok[j]) continue;
      const GaussianRational cross = cands[i][0] * cands[j][1] - cands[i][1] * cands[j][0];
      if (cross.is_zero()) continue;
      if (seen++ == attempt) return {combo(i), combo(j), {i, j}};
    }
  }
  throw Error(ErrorCode::DegenerateFiber, "no admissible pair of nondegenerate fiber elements");
}

// ------------------------------------------------------------ scalar API

GaussianRational sylvester_resultant(const std::vector<GaussianRational>& p, const std::vector<GaussianRational>& q);

Orbit classify_orbit(const ScalarCubic& f);
ScalarMatrix chi_jacobian(const ScalarCubic& f);
/// Generator of Im(alpha^f) for a degenerate f, scaled so that its first
/// nonzero coefficient in (xx, xy, yy) order is 1.
ScalarQuadratic kappa(const ScalarCubic& f);
/// Normalization used by kappa, applied to an arbitrary nonzero quadratic.
ScalarQuadratic projective_normalize(const ScalarQuadratic& q);

struct FiberBasis {
  ScalarCubic first, second;
  SolutionModule<GaussianRational> module;
  std::array<std::size_t, 2> candidate_index;
};
FiberBasis fiber_basis(const TwoPlane& plane);

ScalarCubic gl2_act(const GL2& g, const ScalarCubic& f);
ScalarQuadratic gl2_act(const GL2& g, const ScalarQuadratic& q);
/// det(g) times the map induced by g on the second exterior power of
/// quadratics; chi_hat(gl2_act(g, f)) = wedge_action(g, chi_hat(f)).
ScalarPluecker wedge_action(const GL2& g, const ScalarPluecker& p);

TangentMap<GaussianRational> xi_scalar(const ScalarCubic& f, const ScalarMatrix& phi);

struct Combination {
  GaussianRational b, btilde;
};
/// The unique (b, bt) with xi^{b f + bt ft} = a xi^f + at xi^{ft}.
Combination combine_xi(const ScalarCubic& f, const ScalarCubic& ft, const GaussianRational& a,
                       const GaussianRational& at, const ScalarMatrix& phi);

struct ZetaPair {
  TangentMap<GaussianRational> zeta, zeta_tilde;
  std::array<GaussianRational, 2> w1, w2;  // basis of W, phi(w1) = 0
  std::array<GaussianRational, 2> v1, v2;  // basis of V, alpha^f(v1) = 0
  GaussianRational scale;                  // c with c alpha^f(v2) = phi(w2)
};
/// Two independent isomorphisms zeta, zeta~ with alpha^f o zeta = phi =
/// alpha^f o zeta~ for a degenerate f and a rank-1 phi onto kappa(f).
ZetaPair zeta_pair(const ScalarCubic& f, const ScalarMatrix& phi);

bool is_zero(const ScalarCubic& f);

}  // namespace lagloci
