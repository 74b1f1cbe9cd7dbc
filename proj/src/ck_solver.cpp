#include "lagloci/ck_solver.hpp"

#include <string>

namespace lagloci {

namespace {

void check_system(const CKSystem& sys) {
  if (sys.order < 1) throw Error(ErrorCode::OrderExhausted, "Cauchy-Kowalewski solve needs order >= 1");
  const std::size_t m = sys.m;
  if (sys.a.rows() != m || sys.a.cols() != m || sys.b.rows() != m || sys.b.cols() != m || sys.init.size() != m) {
    throw Error(ErrorCode::OrderMismatch, "system matrices and initial data must all have size " + std::to_string(m));
  }
  for (const auto& x : sys.a.data()) {
    if (x.order() < sys.order) throw Error(ErrorCode::OrderMismatch, "A is known to a lower order than the system");
  }
  for (const auto& x : sys.b.data()) {
    if (x.order() < sys.order) throw Error(ErrorCode::OrderMismatch, "B is known to a lower order than the system");
  }
  for (const auto& x : sys.init) {
    if (x.order() < sys.order) throw Error(ErrorCode::OrderMismatch, "initial data is known to a lower order");
  }
}

// A du/du1 + B u for the current partial solution.
std::vector<BiSeries> right_hand_side(const SeriesMatrix& a, const SeriesMatrix& b, const std::vector<BiSeries>& u) {
  const std::size_t m = u.size();
  std::vector<BiSeries> du;
  for (const auto& x : u) du.push_back(series_diff(x, Var::u1));
  std::vector<BiSeries> out;
  for (std::size_t i = 0; i < m; ++i) {
    BiSeries acc(u[i].order() - 1);
    for (std::size_t j = 0; j < m; ++j) {
      if (!a(i, j).is_zero()) acc += a(i, j) * du[j];
      if (!b(i, j).is_zero()) acc += b(i, j) * u[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

CKSolution ck_solve(const CKSystem& sys) {
  check_system(sys);
  const int n = sys.order;
  const SeriesMatrix a = truncated(sys.a, n);
  const SeriesMatrix b = truncated(sys.b, n);
  std::vector<BiSeries> u;
  for (const auto& x : sys.init) u.push_back(x.truncated(n).as_bi(Var::u1));

  for (int k = 0; k < n; ++k) {
    // Slice k of the right-hand side only sees slices <= k of u, all known.
    const auto rhs = right_hand_side(a, b, u);
    const GaussianRational scale = inverse(GaussianRational(k + 1));
    for (std::size_t i = 0; i < sys.m; ++i) {
      for (const auto& [e, c] : rhs[i].terms()) {
        if (e.second == k) u[i].set_coeff(e.first, k + 1, c * scale);
      }
    }
  }
  return {std::move(u), n - 1};
}

std::vector<BiSeries> ck_residual(const CKSystem& sys, const CKSolution& sol) {
  const auto rhs = right_hand_side(sys.a, sys.b, sol.u);
  std::vector<BiSeries> out;
  for (std::size_t i = 0; i < sol.u.size(); ++i) {
    out.push_back((series_diff(sol.u[i], Var::u2) - rhs[i]).truncated(sol.certified_order));
  }
  return out;
}

}  // namespace lagloci
