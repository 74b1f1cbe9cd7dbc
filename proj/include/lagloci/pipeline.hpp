#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lagloci/ck_solver.hpp"
#include "lagloci/germs.hpp"

namespace lagloci {

/// Two V-valued 1-forms in the (du1, du2) basis: column k is the image of
/// d/du_k in (d/dX, d/dY) coordinates. `chart` is the linear change u = L u'
/// used when closing; its first column is the new u1-axis.
struct CoframePair {
  SeriesMatrix theta, theta_tilde;
  GL2 chart;
  std::size_t chart_index;
};

struct FiberLifts {
  SeriesCubic q, qtilde;
  std::array<std::size_t, 2> candidate_index;
};

/// The `attempt`-th admissible pair of nondegenerate lifts in the fiber
/// over the plane spanned by the columns of d.
FiberLifts lift_fiber_sections(const SeriesMatrix& d, std::size_t attempt = 0);

/// Directions tried, in order, for the new u1-axis.
const std::vector<std::array<GaussianRational, 2>>& chart_directions();

struct ChartChoice {
  GL2 chart;
  std::size_t index;
};
/// First direction v with theta(0) v, theta~(0) v independent.
ChartChoice choose_chart(const SeriesMatrix& theta, const SeriesMatrix& theta_tilde);

CoframePair build_coframes_surface(const SeriesMatrix& d, const SeriesCubic& q, const SeriesCubic& qtilde);

struct CurveCoframes {
  SeriesCubic q;
  CoframePair pair;
};
CurveCoframes build_coframes_curve(const CurveGerm& g);

/// Theta'(u') = Theta(L u') L, the coframe in the chart coordinates.
SeriesMatrix to_chart(const SeriesMatrix& theta, const GL2& chart);
/// Inverse of to_chart.
SeriesMatrix from_chart(const SeriesMatrix& theta, const GL2& chart);

struct ClosedCoframe {
  BiSeries F, Ftilde;
  SeriesMatrix vartheta;
  int certified_order;
};
/// The 2 x 2 Cauchy-Kowalewski system for (F, F~) in the chart coordinates.
CKSystem closing_system(const CoframePair& pair);
ClosedCoframe close_coframe(const CoframePair& pair);

struct CubicSection {
  BiSeries h, htilde;
  SeriesCubic psi;
};
CubicSection solve_cubic_section(const CoframePair& pair, const SeriesCubic& q, const SeriesCubic& qtilde,
                                 const BiSeries& F, const BiSeries& Ftilde, const SeriesMatrix& d);

/// d(row k of vartheta), k = 0, 1: d/du1 of the du2 entry minus d/du2 of the du1 entry.
std::vector<BiSeries> closedness_residual(const SeriesMatrix& vartheta);
/// alpha^psi(vartheta(d/du_k)) - d(d/du_k) for k = 0, 1, three coefficients each.
std::vector<BiSeries> cubic_residual(const SeriesCubic& psi, const SeriesMatrix& vartheta, const SeriesMatrix& d);

/// Potentials (x1, x2) of the two rows of a closed vartheta, without
/// constant terms, valid to one order above vartheta.
std::array<BiSeries, 2> affine_coordinates(const SeriesMatrix& vartheta);

enum class GermKind { surface, curve };
const char* to_string(GermKind k);

struct ChoicesLog {
  std::size_t fiber_attempt = 0;
  std::array<std::size_t, 2> fiber_candidates{};  // surface only
  std::size_t chart_index = 0;
  std::array<GaussianRational, 2> chart_direction{};
};

struct LagrangianCertificate {
  GermKind kind;
  SeriesMatrix vartheta;
  SeriesCubic psi;
  BiSeries F, Ftilde;
  SeriesCubic q;
  std::optional<SeriesCubic> qtilde;
  std::array<BiSeries, 2> affine_coords;
  std::vector<BiSeries> residual_closedness;
  std::vector<BiSeries> residual_cubic_condition;
  int certified_order;
  ChoicesLog choices;
  /// Lowest degree at which chi_hat(psi) is nonzero (0 = nondegenerate at
  /// the origin); surfaces only.
  std::optional<int> psi_chi_hat_valuation;
};

LagrangianCertificate surface_certificate(const SurfaceGerm& g);
LagrangianCertificate curve_certificate(const CurveGerm& g);
LagrangianCertificate certificate(const Germ& g);

struct VerificationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool ok() const;
  const VerificationCheck* find(const std::string& name) const;
};

/// Re-derives every claim of the certificate from the germ alone.
VerificationReport verify_certificate(const Germ& g, const LagrangianCertificate& cert);

}  // namespace lagloci
