#include "lagloci/germs.hpp"

#include <string>

namespace lagloci {

bool is_siegel_point(const SiegelPoint& z) {
  const Rational& y11 = z.z11.im();
  const Rational& y12 = z.z12.im();
  const Rational& y22 = z.z22.im();
  return y11.sign() > 0 && (y11 * y22 - y12 * y12).sign() > 0;
}

SeriesMatrix differential(const SurfaceGerm& g) {
  std::array<BinaryQuadratic<BiSeries>, 2> cols{
      quadratic_from_symmetric(series_diff(g.comps[0], Var::u1), series_diff(g.comps[1], Var::u1),
                               series_diff(g.comps[2], Var::u1)),
      quadratic_from_symmetric(series_diff(g.comps[0], Var::u2), series_diff(g.comps[1], Var::u2),
                               series_diff(g.comps[2], Var::u2)),
  };
  SeriesMatrix out(3, 2, BiSeries(g.order - 1));
  out.set_column(0, cols[0].column());
  out.set_column(1, cols[1].column());
  return out;
}

BinaryQuadratic<UniSeries> tangent_quadratic(const CurveGerm& g) {
  return {g.comps[0].derivative(), GaussianRational(2) * g.comps[1].derivative(), g.comps[2].derivative()};
}

SeriesMatrix differential(const CurveGerm& g) {
  const auto q = tangent_quadratic(g);
  const int order = g.order - 1;
  SeriesMatrix out(3, 2, BiSeries(order));
  out.set_column(0, {q.xx.as_bi(Var::u1), q.xy.as_bi(Var::u1), q.yy.as_bi(Var::u1)});
  return out;
}

SeriesMatrix differential(const Germ& g) {
  return std::visit([](const auto& x) { return differential(x); }, g);
}

UniSeries tangent_discriminant(const CurveGerm& g) {
  const auto q = tangent_quadratic(g);
  return q.xy * q.xy - GaussianRational(4) * (q.xx * q.yy);
}

bool is_null_curve(const CurveGerm& g) {
  const auto q = tangent_quadratic(g);
  if (q.xx.constant_term().is_zero() && q.xy.constant_term().is_zero() && q.yy.constant_term().is_zero()) {
    throw Error(ErrorCode::NotImmersed, "s'(0) = 0");
  }
  return tangent_discriminant(g).is_zero();
}

namespace {

const char* const kSlot[3] = {"z11", "z12", "z22"};

template <class S>
void check_components(const std::array<S, 3>& comps, int order, ValidationReport& report) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (comps[k].order() != order) {
      report.issues.push_back({"order", std::string(kSlot[k]) + " has order " + std::to_string(comps[k].order()) +
                                            ", germ order is " + std::to_string(order)});
    }
    if (!comps[k].constant_term().is_zero()) {
      report.issues.push_back({"constant_term", std::string(kSlot[k]) + " has a nonzero constant term"});
    }
  }
}

void check_base(const SiegelPoint& base, ValidationReport& report) {
  if (!is_siegel_point(base)) {
    report.issues.push_back({"siegel", "imaginary part of the base point is not positive definite"});
  }
}

}  // namespace

ValidationReport validate_germ(const SurfaceGerm& g) {
  ValidationReport report;
  check_base(g.base, report);
  if (g.order < 2) {
    report.issues.push_back({"order", "surface germs need order >= 2"});
    return report;
  }
  check_components(g.comps, g.order, report);
  if (rank(at_origin(differential(g))) != 2) {
    report.issues.push_back({"immersion", "dphi has rank < 2 at the origin"});
  }
  return report;
}

ValidationReport validate_germ(const CurveGerm& g) {
  ValidationReport report;
  check_base(g.base, report);
  if (g.order < 2) {
    report.issues.push_back({"order", "curve germs need order >= 2"});
    return report;
  }
  check_components(g.comps, g.order, report);
  const auto q = tangent_quadratic(g);
  if (q.xx.constant_term().is_zero() && q.xy.constant_term().is_zero() && q.yy.constant_term().is_zero()) {
    report.issues.push_back({"immersion", "s'(0) = 0"});
  }
  return report;
}

ValidationReport validate_germ(const Germ& g) {
  return std::visit([](const auto& x) { return validate_germ(x); }, g);
}

SurfaceGerm with_order(const SurfaceGerm& g, int n) {
  return {g.base, {g.comps[0].with_order(n), g.comps[1].with_order(n), g.comps[2].with_order(n)}, n};
}

CurveGerm with_order(const CurveGerm& g, int n) {
  return {g.base, {g.comps[0].with_order(n), g.comps[1].with_order(n), g.comps[2].with_order(n)}, n};
}

Germ with_order(const Germ& g, int n) {
  return std::visit([n](const auto& x) -> Germ { return with_order(x, n); }, g);
}

}  // namespace lagloci
