#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "lagloci/cubic.hpp"

namespace lagloci {

/// Complex symmetric 2x2 matrix [[z11, z12], [z12, z22]].
struct SiegelPoint {
  GaussianRational z11, z12, z22;
};

/// Surface germ Z(u1, u2) = base + comps, comps without constant terms.
struct SurfaceGerm {
  SiegelPoint base;
  std::array<BiSeries, 3> comps;  // Z11, Z12, Z22
  int order;
};

/// Curve germ Z(t) = base + comps, comps without constant terms.
struct CurveGerm {
  SiegelPoint base;
  std::array<UniSeries, 3> comps;
  int order;
};

using Germ = std::variant<SurfaceGerm, CurveGerm>;

/// The matrix W corresponds to W11 X^2 + 2 W12 XY + W22 Y^2.
template <class R>
BinaryQuadratic<R> quadratic_from_symmetric(const R& w11, const R& w12, const R& w22) {
  return {w11, GaussianRational(2) * w12, w22};
}

/// Inverse of quadratic_from_symmetric: (W11, W12, W22).
template <class R>
std::array<R, 3> symmetric_from_quadratic(const BinaryQuadratic<R>& q) {
  return {q.xx, GaussianRational(Rational(1, 2)) * q.xy, q.yy};
}

bool is_siegel_point(const SiegelPoint& z);

/// 3 x 2 matrix whose columns are the quadratic coefficient vectors of
/// dphi(d/du1), dphi(d/du2). A curve is promoted to the cylinder
/// phi(u1, u2) = s(u1), so its second column vanishes.
SeriesMatrix differential(const SurfaceGerm& g);
SeriesMatrix differential(const CurveGerm& g);
SeriesMatrix differential(const Germ& g);

/// Tangent quadratic Q(t) of a curve, as series in t of order N - 1.
BinaryQuadratic<UniSeries> tangent_quadratic(const CurveGerm& g);

/// Discriminant of the tangent quadratic, as a series in t.
UniSeries tangent_discriminant(const CurveGerm& g);

bool is_null_curve(const CurveGerm& g);

struct ValidationIssue {
  std::string check;  // "siegel", "immersion", "order", "constant_term"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

ValidationReport validate_germ(const SurfaceGerm& g);
ValidationReport validate_germ(const CurveGerm& g);
ValidationReport validate_germ(const Germ& g);

/// Reinterprets every component as a jet of order n (padding with zeros
/// when n exceeds the stored order).
SurfaceGerm with_order(const SurfaceGerm& g, int n);
CurveGerm with_order(const CurveGerm& g, int n);
Germ with_order(const Germ& g, int n);

}  // namespace lagloci
