#include "lagloci/pipeline.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace lagloci {

namespace {

GL2 inverse_chart(const GL2& l) {
  const GaussianRational inv = inverse(l.det());
  return GL2(l.g22() * inv, -l.g12() * inv, -l.g21() * inv, l.g11() * inv);
}

ScalarMatrix chart_matrix(const GL2& l) { return ScalarMatrix::from_rows({{l.g11(), l.g12()}, {l.g21(), l.g22()}}); }

BiSeries substitute(const BiSeries& s, const GL2& l) {
  return linear_substitute(s, l.g11(), l.g12(), l.g21(), l.g22());
}

int cubic_order(const SeriesCubic& f) { return std::min({f.a.order(), f.b.order(), f.c.order(), f.e.order()}); }

SeriesCubic truncated(const SeriesCubic& f, int n) {
  return {f.a.truncated(n), f.b.truncated(n), f.c.truncated(n), f.e.truncated(n)};
}

SeriesQuadratic column_quadratic(const SeriesMatrix& m, std::size_t k) {
  return SeriesQuadratic::from_column(m.column(k));
}

Vec2<BiSeries> column_vector(const SeriesMatrix& m, std::size_t k) { return {m(0, k), m(1, k)}; }

bool all_zero(const std::vector<BiSeries>& v) {
  return std::all_of(v.begin(), v.end(), [](const BiSeries& s) { return s.is_zero(); });
}

std::vector<BiSeries> truncated(const std::vector<BiSeries>& v, int n) {
  std::vector<BiSeries> out;
  for (const auto& s : v) out.push_back(s.truncated(n));
  return out;
}

// Index and lowest degree of the first nonzero entry, for reports.
std::string first_nonzero(const std::vector<BiSeries>& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) {
      return "entry " + std::to_string(k) + " nonzero at degree " + std::to_string(*v[k].valuation());
    }
  }
  return "all zero";
}

void require_valid(const ValidationReport& report) {
  if (report.ok()) return;
  const auto& issue = report.issues.front();
  ErrorCode code = ErrorCode::InvalidGerm;
  if (issue.check == "siegel") code = ErrorCode::NotSiegel;
  if (issue.check == "immersion") code = ErrorCode::NotImmersed;
  throw Error(code, issue.message);
}

SeriesMatrix combine(const BiSeries& F, const SeriesMatrix& theta, const BiSeries& Ft, const SeriesMatrix& theta_t) {
  std::vector<BiSeries> data;
  for (std::size_t k = 0; k < theta.data().size(); ++k) {
    data.push_back(F * theta.data()[k] + Ft * theta_t.data()[k]);
  }
  return SeriesMatrix(theta.rows(), theta.cols(), std::move(data));
}

}  // namespace

const char* to_string(GermKind k) { return k == GermKind::surface ? "surface" : "curve"; }

FiberLifts lift_fiber_sections(const SeriesMatrix& d, std::size_t attempt) {
  const auto module = solution_module(column_quadratic(d, 0), column_quadratic(d, 1));
  auto choice = select_fiber_pair(module, attempt);
  return {std::move(choice.first), std::move(choice.second), choice.candidate_index};
}

const std::vector<std::array<GaussianRational, 2>>& chart_directions() {
  static const std::vector<std::array<GaussianRational, 2>> list = [] {
    std::vector<std::array<GaussianRational, 2>> out{{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (int k = 2; k <= 4; ++k) {
      out.push_back({1, k});
      out.push_back({k, 1});
      out.push_back({1, -k});
      out.push_back({k, -1});
    }
    return out;
  }();
  return list;
}

ChartChoice choose_chart(const SeriesMatrix& theta, const SeriesMatrix& theta_tilde) {
  const ScalarMatrix t0 = at_origin(theta);
  const ScalarMatrix tt0 = at_origin(theta_tilde);
  const auto& dirs = chart_directions();
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const auto& v = dirs[k];
    const ScalarMatrix col = ScalarMatrix::from_rows({{v[0]}, {v[1]}});
    const ScalarMatrix a = t0 * col;
    const ScalarMatrix b = tt0 * col;
    if ((a(0, 0) * b(1, 0) - a(1, 0) * b(0, 0)).is_zero()) continue;
    if (v[0].is_zero()) return {GL2(v[0], 1, v[1], 0), k};
    return {GL2(v[0], 0, v[1], 1), k};
  }
  throw Error(ErrorCode::NoAdmissibleChart, "no listed direction separates the two coframes");
}

CoframePair build_coframes_surface(const SeriesMatrix& d, const SeriesCubic& q, const SeriesCubic& qtilde) {
  SeriesMatrix theta = uniform(xi_of(q, d));
  SeriesMatrix theta_tilde = uniform(xi_of(qtilde, d));
  if (det2(at_origin(theta)).is_zero() || det2(at_origin(theta_tilde)).is_zero()) {
    throw Error(ErrorCode::SingularAtOrigin, "lifted coframe is singular at the origin");
  }
  auto chart = choose_chart(theta, theta_tilde);
  return {std::move(theta), std::move(theta_tilde), chart.chart, chart.index};
}

CurveCoframes build_coframes_curve(const CurveGerm& g) {
  if (!is_null_curve(g)) throw Error(ErrorCode::NotNullCurve, "tangent quadratic is not a perfect square");
  const SeriesMatrix d = differential(g);
  const SeriesQuadratic big_q = column_quadratic(d, 0);
  const GaussianRational half(Rational(1, 2));

  // l = lambda X + mu Y with l^2 = s Q.
  BiSeries lambda = big_q.xx;
  BiSeries mu = half * big_q.xy;
  BiSeries s = big_q.xx;
  if (big_q.xx.constant_term().is_zero()) {
    lambda = half * big_q.xy;
    mu = big_q.yy;
    s = big_q.yy;
  }
  const GaussianRational three(3);
  SeriesCubic q{lambda * lambda * lambda, mu * mu * mu, three * (lambda * lambda * mu), three * (lambda * mu * mu)};

  // v1 spans Ker alpha^q; c alpha^q(v2) = 3 c l(v2) l^2 = Q.
  const int order = d(0, 0).order();
  const BiSeries zero(order);
  const BiSeries one = BiSeries::constant(1, order);
  const bool use_x = !lambda.constant_term().is_zero();
  const Vec2<BiSeries> v1{-mu, lambda};
  const Vec2<BiSeries> v2 = use_x ? Vec2<BiSeries>{one, zero} : Vec2<BiSeries>{zero, one};
  const BiSeries c = series_invert(three * ((use_x ? lambda : mu) * s));

  const GaussianRational two(2);
  SeriesMatrix theta = SeriesMatrix::from_rows({{c * v2.x, v1.x}, {c * v2.y, v1.y}});
  SeriesMatrix theta_tilde = SeriesMatrix::from_rows({{c * v2.x, two * v1.x}, {c * v2.y, two * v1.y}});
  theta = uniform(theta);
  theta_tilde = uniform(theta_tilde);
  auto chart = choose_chart(theta, theta_tilde);
  return {std::move(q), {std::move(theta), std::move(theta_tilde), chart.chart, chart.index}};
}

SeriesMatrix to_chart(const SeriesMatrix& theta, const GL2& chart) {
  std::vector<BiSeries> data;
  for (const auto& x : theta.data()) data.push_back(substitute(x, chart));
  const SeriesMatrix moved(theta.rows(), theta.cols(), std::move(data));
  return moved * to_series(chart_matrix(chart), min_order(theta));
}

SeriesMatrix from_chart(const SeriesMatrix& theta, const GL2& chart) { return to_chart(theta, inverse_chart(chart)); }

CKSystem closing_system(const CoframePair& pair) {
  const SeriesMatrix t = to_chart(pair.theta, pair.chart);
  const SeriesMatrix tt = to_chart(pair.theta_tilde, pair.chart);
  // Paper notation: theta = [[f, g], [h, j]] against (dx, dy).
  const SeriesMatrix m = SeriesMatrix::from_rows({{t(0, 0), tt(0, 0)}, {t(1, 0), tt(1, 0)}});
  if (det2(at_origin(m)).is_zero()) {
    throw Error(ErrorCode::E0ConditionFails, "f h~ - h f~ vanishes at the origin in the chosen chart");
  }
  const SeriesMatrix g = SeriesMatrix::from_rows({{t(0, 1), tt(0, 1)}, {t(1, 1), tt(1, 1)}});
  auto curl = [](const SeriesMatrix& x, std::size_t row) {
    return series_diff(x(row, 1), Var::u1) - series_diff(x(row, 0), Var::u2);
  };
  const SeriesMatrix dm = SeriesMatrix::from_rows({{curl(t, 0), curl(tt, 0)}, {curl(t, 1), curl(tt, 1)}});
  const SeriesMatrix m_inv = series_matrix_inverse(m);
  SeriesMatrix a = uniform(m_inv * g);
  SeriesMatrix b = uniform(m_inv * dm);
  const int order = std::min(min_order(a), min_order(b));
  std::vector<UniSeries> init{UniSeries::constant(1, order), UniSeries(order)};
  return {2, std::move(a), std::move(b), std::move(init), order};
}

ClosedCoframe close_coframe(const CoframePair& pair) {
  const CKSystem sys = closing_system(pair);
  const CKSolution sol = ck_solve(sys);
  const GL2 back = inverse_chart(pair.chart);
  BiSeries F = substitute(sol.u[0], back);
  BiSeries Ft = substitute(sol.u[1], back);
  SeriesMatrix vartheta = uniform(combine(F, pair.theta, Ft, pair.theta_tilde));
  return {std::move(F), std::move(Ft), std::move(vartheta), sol.certified_order};
}

CubicSection solve_cubic_section(const CoframePair& pair, const SeriesCubic& q, const SeriesCubic& qtilde,
                                 const BiSeries& F, const BiSeries& Ftilde, const SeriesMatrix& d) {
  const SeriesMatrix z = uniform(combine(F, pair.theta, Ftilde, pair.theta_tilde));
  auto [lhs, rhs] = combination_system(q, qtilde, z, d);
  const SeriesMatrix sol = series_linear_solve(lhs, rhs);
  BiSeries h = sol(0, 0);
  BiSeries ht = sol(1, 0);
  SeriesCubic psi = h * q + ht * qtilde;
  return {std::move(h), std::move(ht), std::move(psi)};
}

std::vector<BiSeries> closedness_residual(const SeriesMatrix& vartheta) {
  std::vector<BiSeries> out;
  for (std::size_t row = 0; row < 2; ++row) {
    out.push_back(series_diff(vartheta(row, 1), Var::u1) - series_diff(vartheta(row, 0), Var::u2));
  }
  return out;
}

std::vector<BiSeries> cubic_residual(const SeriesCubic& psi, const SeriesMatrix& vartheta, const SeriesMatrix& d) {
  std::vector<BiSeries> out;
  for (std::size_t k = 0; k < 2; ++k) {
    const auto diff = alpha_apply(psi, column_vector(vartheta, k)) - column_quadratic(d, k);
    for (auto& x : diff.column()) out.push_back(std::move(x));
  }
  return out;
}

std::array<BiSeries, 2> affine_coordinates(const SeriesMatrix& vartheta) {
  const auto res = closedness_residual(vartheta);
  if (!all_zero(res)) throw Error(ErrorCode::NotClosed, "d(vartheta): " + first_nonzero(res));
  std::array<BiSeries, 2> out{BiSeries(0), BiSeries(0)};
  for (std::size_t row = 0; row < 2; ++row) {
    const BiSeries& p = vartheta(row, 0);
    const BiSeries& q = vartheta(row, 1);
    // Radial integration: the degree-d part integrates to (u1 P_d + u2 Q_d)/(d+1).
    BiSeries x(std::min(p.order(), q.order()) + 1);
    for (const auto& [e, c] : p.terms()) {
      x.add_to_coeff(e.first + 1, e.second, c * inverse(GaussianRational(e.first + e.second + 1)));
    }
    for (const auto& [e, c] : q.terms()) {
      x.add_to_coeff(e.first, e.second + 1, c * inverse(GaussianRational(e.first + e.second + 1)));
    }
    out[row] = std::move(x);
  }
  return out;
}

namespace {

std::optional<int> chi_hat_valuation(const SeriesCubic& psi) {
  const auto chi = chi_hat(psi);
  std::optional<int> best;
  for (const auto* x : {&chi.p, &chi.q, &chi.r}) {
    const auto v = x->valuation();
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

LagrangianCertificate finish(GermKind kind, const SeriesMatrix& d, const ClosedCoframe& closed, SeriesCubic psi,
                             SeriesCubic q, std::optional<SeriesCubic> qtilde, ChoicesLog choices) {
  const SeriesMatrix& vartheta = closed.vartheta;
  const int theta_order = min_order(vartheta);
  const int cubic_order_bound = std::min({cubic_order(psi), theta_order, min_order(d)});
  const int n = std::min(closed.certified_order, cubic_order_bound);

  auto closedness = truncated(closedness_residual(vartheta), n);
  auto cubic = truncated(cubic_residual(psi, vartheta, d), n);
  if (!all_zero(closedness)) {
    throw Error(ErrorCode::VerificationFailed, "closedness residual: " + first_nonzero(closedness));
  }
  if (!all_zero(cubic)) throw Error(ErrorCode::VerificationFailed, "cubic condition residual: " + first_nonzero(cubic));

  std::optional<int> valuation;
  if (kind == GermKind::surface) valuation = chi_hat_valuation(psi);
  if (qtilde) qtilde = truncated(*qtilde, std::min(theta_order, cubic_order(*qtilde)));
  return {kind,
          vartheta,
          truncated(psi, n),
          closed.F,
          closed.Ftilde,
          truncated(q, std::min(theta_order, cubic_order(q))),
          std::move(qtilde),
          affine_coordinates(vartheta),
          std::move(closedness),
          std::move(cubic),
          n,
          choices,
          valuation};
}

bool retryable(ErrorCode c) {
  return c == ErrorCode::NoAdmissibleChart || c == ErrorCode::SingularAtOrigin ||
         c == ErrorCode::RankDeficientAtOrigin || c == ErrorCode::E0ConditionFails;
}

}  // namespace

LagrangianCertificate surface_certificate(const SurfaceGerm& g) {
  require_valid(validate_germ(g));
  const SeriesMatrix d = differential(g);
  for (std::size_t attempt = 0;; ++attempt) {
    // select_fiber_pair raises DegenerateFiber once the candidate list runs out.
    FiberLifts lifts = lift_fiber_sections(d, attempt);
    try {
      const CoframePair pair = build_coframes_surface(d, lifts.q, lifts.qtilde);
      const ClosedCoframe closed = close_coframe(pair);
      CubicSection section = solve_cubic_section(pair, lifts.q, lifts.qtilde, closed.F, closed.Ftilde, d);
      ChoicesLog log{attempt, lifts.candidate_index, pair.chart_index, chart_directions()[pair.chart_index]};
      return finish(GermKind::surface, d, closed, std::move(section.psi), std::move(lifts.q), std::move(lifts.qtilde),
                    log);
    } catch (const Error& e) {
      if (!retryable(e.code())) throw;
    }
  }
}

LagrangianCertificate curve_certificate(const CurveGerm& g) {
  require_valid(validate_germ(g));
  CurveCoframes built = build_coframes_curve(g);
  const SeriesMatrix d = differential(g);
  const ClosedCoframe closed = close_coframe(built.pair);
  const BiSeries scale = series_invert(closed.F + closed.Ftilde);
  SeriesCubic psi = scale * built.q;
  ChoicesLog log{0, {0, 0}, built.pair.chart_index, chart_directions()[built.pair.chart_index]};
  return finish(GermKind::curve, d, closed, std::move(psi), std::move(built.q), std::nullopt, log);
}

LagrangianCertificate certificate(const Germ& g) {
  if (const auto* s = std::get_if<SurfaceGerm>(&g)) return surface_certificate(*s);
  return curve_certificate(std::get<CurveGerm>(g));
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

const VerificationCheck* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_certificate(const Germ& g, const LagrangianCertificate& cert) {
  VerificationReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const bool surface = std::holds_alternative<SurfaceGerm>(g);
  const bool kind_ok = surface == (cert.kind == GermKind::surface);
  add("kind", kind_ok, std::string("germ is a ") + (surface ? "surface" : "curve"));
  const ValidationReport validation = validate_germ(g);
  add("germ", validation.ok(), validation.ok() ? "valid" : validation.issues.front().message);
  if (!kind_ok || !validation.ok()) return report;

  const SeriesMatrix d = differential(g);
  const SeriesMatrix& vartheta = cert.vartheta;
  const int n = cert.certified_order;
  const int theta_order = min_order(vartheta);
  const bool shapes = vartheta.rows() == 2 && vartheta.cols() == 2 && cert.residual_closedness.size() == 2 &&
                      cert.residual_cubic_condition.size() == 6 && (!surface || cert.qtilde.has_value());
  add("shape", shapes, shapes ? "ok" : "unexpected field sizes");
  if (!shapes) return report;
  const bool bound = n >= 0 && n <= theta_order - 1 && n <= cubic_order(cert.psi) && n <= min_order(d);
  add("order_bound", bound,
      "certified_order " + std::to_string(n) + ", vartheta order " + std::to_string(theta_order) + ", psi order " +
          std::to_string(cubic_order(cert.psi)));
  if (!bound) return report;

  const auto closedness = truncated(closedness_residual(vartheta), n);
  add("closedness", all_zero(closedness), first_nonzero(closedness));

  const bool invertible = !det2(at_origin(vartheta)).is_zero();
  add("coframe", invertible, invertible ? "vartheta(0) invertible" : "det vartheta(0) = 0");

  const auto cubic = truncated(cubic_residual(cert.psi, vartheta, d), n);
  add("cubic_condition", all_zero(cubic), first_nonzero(cubic));

  const bool initial = cert.F.constant_term() == GaussianRational(1) && cert.Ftilde.constant_term().is_zero();
  add("initial_values", initial, "F(0) = " + cert.F.constant_term().str() + ", F~(0) = " + cert.Ftilde.constant_term().str());

  if (surface) {
    bool nondegenerate = false;
    try {
      nondegenerate = !is_degenerate(at_origin(cert.psi));
    } catch (const Error&) {
    }
    add("psi_nondegenerate", nondegenerate, nondegenerate ? "psi(0) outside the degeneracy cone" : "psi(0) degenerate");
    std::string detail = "vartheta = F xi^q + F~ xi^q~";
    bool relation = false;
    try {
      const SeriesMatrix theta = xi_of(cert.q, d);
      const SeriesMatrix theta_t = xi_of(*cert.qtilde, d);
      relation = combine(cert.F, theta, cert.Ftilde, theta_t) == vartheta;
    } catch (const Error& e) {
      detail = e.what();
    }
    add("coframe_relation", relation, detail);

    // theta~ enters vartheta multiplied by F~, which vanishes at the origin, so
    // the relation above does not pin the top coefficients of q~. Re-derive the
    // lifts from the germ and the recorded choices instead.
    bool lifts = cubic_order(cert.q) >= theta_order && cubic_order(*cert.qtilde) >= theta_order;
    std::string lift_detail = lifts ? "q, q~ reproduce the recorded fiber choice" : "q or q~ stored below vartheta order";
    if (lifts) {
      try {
        const FiberLifts redo = lift_fiber_sections(d, cert.choices.fiber_attempt);
        lifts = redo.candidate_index == cert.choices.fiber_candidates &&
                truncated(redo.q, cubic_order(cert.q)) == cert.q &&
                truncated(redo.qtilde, cubic_order(*cert.qtilde)) == *cert.qtilde;
        if (!lifts) lift_detail = "q or q~ differs from the recorded fiber choice";
      } catch (const Error& e) {
        lifts = false;
        lift_detail = e.what();
      }
    }
    add("fiber_lifts", lifts, lift_detail);
  } else {
    const BiSeries sum = cert.F + cert.Ftilde;
    add("unit_scale", sum.is_unit(), "(F + F~)(0) = " + sum.constant_term().str());
    bool relation = true;
    for (std::size_t k = 0; k < 2; ++k) {
      relation = relation && alpha_apply(cert.q, column_vector(vartheta, k)) == sum * column_quadratic(d, k);
    }
    add("coframe_relation", relation, "alpha^q(vartheta) = (F + F~) dphi");
  }

  bool affine = true;
  for (std::size_t row = 0; row < 2; ++row) {
    const BiSeries& x = cert.affine_coords[row];
    affine = affine && x.order() >= theta_order + 1 && x.constant_term().is_zero() &&
             series_diff(x, Var::u1) == vartheta(row, 0) && series_diff(x, Var::u2) == vartheta(row, 1);
  }
  add("affine_coordinates", affine, "d x^k = row k of vartheta");

  const bool stored = all_zero(cert.residual_closedness) && all_zero(cert.residual_cubic_condition);
  add("stored_residuals", stored, stored ? "all zero" : "nonzero stored residual");
  return report;
}

}  // namespace lagloci
