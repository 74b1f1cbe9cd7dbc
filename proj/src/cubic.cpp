#include "lagloci/cubic.hpp"

namespace lagloci {

namespace {

using Form = std::vector<GaussianRational>;  // coefficients of X^{d-k} Y^k

Form multiply(const Form& l, const Form& r) {
  Form out(l.size() + r.size() - 1);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
  }
  return out;
}

Form scaled(const GaussianRational& s, Form f) {
  for (auto& x : f) x *= s;
  return f;
}

Form add(Form l, const Form& r) {
  for (std::size_t k = 0; k < l.size(); ++k) l[k] += r[k];
  return l;
}

ScalarQuadratic quadratic_from_form(const Form& f) { return {f[0], f[1], f[2]}; }

struct Substitution {
  Form l1, l2;  // images of X and Y
  explicit Substitution(const GL2& g) : l1{g.g11(), g.g12()}, l2{g.g21(), g.g22()} {}
};

}  // namespace

GL2::GL2(GaussianRational g11, GaussianRational g12, GaussianRational g21, GaussianRational g22)
    : m_{std::move(g11), std::move(g12), std::move(g21), std::move(g22)} {
  if (det().is_zero()) throw Error(ErrorCode::SingularGroupElement, "group element has zero determinant");
}

ScalarPluecker TwoPlane::pluecker() const { return wedge(span1, span2); }

const char* to_string(Orbit o) {
  switch (o) {
    case Orbit::SmoothOrbit: return "SmoothOrbit";
    case Orbit::NodalOrbit: return "NodalOrbit";
    case Orbit::Degenerate: return "Degenerate";
  }
  return "?";
}

bool is_zero(const ScalarCubic& f) { return f.a.is_zero() && f.b.is_zero() && f.c.is_zero() && f.e.is_zero(); }

bool is_degenerate(const ScalarCubic& f) {
  if (is_zero(f)) throw Error(ErrorCode::ZeroCubic, "the zero cubic has no degeneracy type");
  const auto dx = partial_x(f);
  const auto dy = partial_y(f);
  return rank(ScalarMatrix::from_rows({dx.column(), dy.column()})) <= 1;
}

GaussianRational sylvester_resultant(const std::vector<GaussianRational>& p, const std::vector<GaussianRational>& q) {
  // Coefficients are listed from the highest power down.
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  const std::size_t size = m + n;
  ScalarMatrix s(size, size, GaussianRational{});
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) s(row, row + k) = p[k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) s(n + row, row + k) = q[k];
  }
  return determinant(std::move(s));
}

Orbit classify_orbit(const ScalarCubic& f) {
  if (is_degenerate(f)) return Orbit::Degenerate;
  // Make the X^3 coefficient nonzero by Y -> kX + Y; at most three k fail.
  ScalarCubic g = f;
  for (int k = 1; g.a.is_zero(); ++k) g = gl2_act(GL2(1, 0, k, 1), f);
  // f(x, 1) = a x^3 + c x^2 + e x + b has a repeated root iff Res(f, f') = 0.
  const std::vector<GaussianRational> poly{g.a, g.c, g.e, g.b};
  const std::vector<GaussianRational> deriv{GaussianRational(3) * g.a, GaussianRational(2) * g.c, g.e};
  return sylvester_resultant(poly, deriv).is_zero() ? Orbit::NodalOrbit : Orbit::SmoothOrbit;
}

ScalarMatrix chi_jacobian(const ScalarCubic& f) {
  const GaussianRational& a = f.a;
  const GaussianRational& b = f.b;
  const GaussianRational& c = f.c;
  const GaussianRational& e = f.e;
  return ScalarMatrix::from_rows({
      {9 * b, 9 * a, -e, -c},
      {6 * e, 0, -4 * c, 6 * a},
      {0, -6 * c, -6 * b, 4 * e},
  });
}

ScalarQuadratic projective_normalize(const ScalarQuadratic& q) {
  for (const auto& lead : {q.xx, q.xy, q.yy}) {
    if (!lead.is_zero()) return inverse(lead) * q;
  }
  throw Error(ErrorCode::ZeroCubic, "cannot normalize the zero quadratic");
}

ScalarQuadratic kappa(const ScalarCubic& f) {
  if (!is_degenerate(f)) throw Error(ErrorCode::NotDegenerate, "kappa is defined on the degeneracy cone only");
  const auto dx = partial_x(f);
  const auto dy = partial_y(f);
  const bool dx_zero = dx.xx.is_zero() && dx.xy.is_zero() && dx.yy.is_zero();
  return projective_normalize(dx_zero ? dy : dx);
}

std::array<std::size_t, 2> fiber_pivot_columns(const ScalarMatrix& system) {
  // Row-reduce with columns visited in the order e, c, b, a.
  ScalarMatrix m = system;
  std::array<std::size_t, 2> pivots{};
  std::size_t found = 0;
  std::vector<bool> row_used(m.rows(), false);
  for (std::size_t step = 0; step < 4 && found < 2; ++step) {
    const std::size_t col = 3 - step;
    std::optional<std::size_t> piv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!row_used[r] && !m(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (!piv) continue;
    row_used[*piv] = true;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == *piv || m(r, col).is_zero()) continue;
      const GaussianRational f = m(r, col) / m(*piv, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(*piv, c);
    }
    pivots[found++] = col;
  }
  if (found < 2) {
    throw Error(ErrorCode::SolutionSpaceNotRank2, "the plane is not two-dimensional at the origin");
  }
  if (pivots[0] > pivots[1]) std::swap(pivots[0], pivots[1]);
  return pivots;
}

const std::vector<std::array<GaussianRational, 2>>& fiber_parameter_candidates() {
  static const std::vector<std::array<GaussianRational, 2>> list = [] {
    std::vector<std::array<GaussianRational, 2>> out{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {2, -1}, {1, -2}};
    for (int k = 3; k <= 5; ++k) {
      out.push_back({k, 1});
      out.push_back({1, k});
      out.push_back({k, -1});
      out.push_back({1, -k});
    }
    return out;
  }();
  return list;
}

FiberBasis fiber_basis(const TwoPlane& plane) {
  const auto p = plane.pluecker();
  if (p.p.is_zero() && p.q.is_zero() && p.r.is_zero()) {
    throw Error(ErrorCode::SolutionSpaceNotRank2, "spanning quadratics are linearly dependent");
  }
  auto module = solution_module(plane.span1, plane.span2);
  auto choice = select_fiber_pair(module);
  return {choice.first, choice.second, module, choice.candidate_index};
}

ScalarCubic gl2_act(const GL2& g, const ScalarCubic& f) {
  const Substitution s(g);
  const Form x2 = multiply(s.l1, s.l1);
  const Form y2 = multiply(s.l2, s.l2);
  Form out = scaled(f.a, multiply(x2, s.l1));
  out = add(out, scaled(f.b, multiply(y2, s.l2)));
  out = add(out, scaled(f.c, multiply(x2, s.l2)));
  out = add(out, scaled(f.e, multiply(s.l1, y2)));
  return {out[0], out[3], out[1], out[2]};
}

ScalarQuadratic gl2_act(const GL2& g, const ScalarQuadratic& q) {
  const Substitution s(g);
  Form out = scaled(q.xx, multiply(s.l1, s.l1));
  out = add(out, scaled(q.xy, multiply(s.l1, s.l2)));
  out = add(out, scaled(q.yy, multiply(s.l2, s.l2)));
  return quadratic_from_form(out);
}

ScalarPluecker wedge_action(const GL2& g, const ScalarPluecker& p) {
  const Substitution s(g);
  const auto xx = quadratic_from_form(multiply(s.l1, s.l1));
  const auto xy = quadratic_from_form(multiply(s.l1, s.l2));
  const auto yy = quadratic_from_form(multiply(s.l2, s.l2));
  const auto w1 = wedge(xx, yy);
  const auto w2 = wedge(xx, xy);
  const auto w3 = wedge(yy, xy);
  const GaussianRational d = g.det();
  return {d * (p.p * w1.p + p.q * w2.p + p.r * w3.p), d * (p.p * w1.q + p.q * w2.q + p.r * w3.q),
          d * (p.p * w1.r + p.q * w2.r + p.r * w3.r)};
}

TangentMap<GaussianRational> xi_scalar(const ScalarCubic& f, const ScalarMatrix& phi) { return xi_of(f, phi); }

Combination combine_xi(const ScalarCubic& f, const ScalarCubic& ft, const GaussianRational& a,
                       const GaussianRational& at, const ScalarMatrix& phi) {
  const auto xf = xi_of(f, phi);
  const auto xft = xi_of(ft, phi);
  const auto z = a * xf + at * xft;
  if (det2(z).is_zero()) {
    throw Error(ErrorCode::NotAnIsomorphism, "a xi^f + at xi^ft is not invertible");
  }
  auto [lhs, rhs] = combination_system(f, ft, z, phi);
  const auto sol = linear_solve(std::move(lhs), std::move(rhs));
  return {sol(0, 0), sol(1, 0)};
}

namespace {

std::array<GaussianRational, 2> complement(const std::array<GaussianRational, 2>& v) {
  // First standard basis vector not on the line through v.
  if (!v[1].is_zero()) return {1, 0};
  return {0, 1};
}

std::array<GaussianRational, 2> as_pair(const std::vector<GaussianRational>& v) { return {v[0], v[1]}; }

}  // namespace

ZetaPair zeta_pair(const ScalarCubic& f, const ScalarMatrix& phi) {
  const ScalarQuadratic line = kappa(f);
  if (rank(phi) != 1) throw Error(ErrorCode::RankMismatch, "phi must have rank 1");
  const auto c0 = ScalarQuadratic::from_column(phi.column(0));
  const auto c1 = ScalarQuadratic::from_column(phi.column(1));
  const bool c0_zero = c0.xx.is_zero() && c0.xy.is_zero() && c0.yy.is_zero();
  if (!(projective_normalize(c0_zero ? c1 : c0) == line)) {
    throw Error(ErrorCode::WrongKappaImage, "the image of phi is not kappa(f)");
  }

  const auto w1 = as_pair(nullspace(phi).front());
  const auto w2 = complement(w1);
  const auto v1 = as_pair(nullspace(alpha_matrix(f)).front());
  const auto v2 = complement(v1);

  // phi(w2) = c alpha^f(v2); read c off the first nonzero coefficient.
  const auto image = alpha_apply(f, Vec2<GaussianRational>{v2[0], v2[1]}).column();
  const auto target = (phi * ScalarMatrix::from_rows({{w2[0]}, {w2[1]}})).column(0);
  GaussianRational c;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!image[k].is_zero()) {
      c = target[k] / image[k];
      break;
    }
  }

  const ScalarMatrix w_inv = matrix_inverse(ScalarMatrix::from_rows({{w1[0], w2[0]}, {w1[1], w2[1]}}));
  auto zeta = ScalarMatrix::from_rows({{v1[0], c * v2[0]}, {v1[1], c * v2[1]}}) * w_inv;
  auto zeta_tilde = ScalarMatrix::from_rows({{2 * v1[0], c * v2[0]}, {2 * v1[1], c * v2[1]}}) * w_inv;
  return {std::move(zeta), std::move(zeta_tilde), w1, w2, v1, v2, c};
}

}  // namespace lagloci
