#pragma once

#include <cstddef>
#include <vector>

#include "lagloci/linalg.hpp"

namespace lagloci {

/// du/du2 = A du/du1 + B u with u(u1, 0) = init, solved as jets of total
/// degree `order`. A and B may carry more precision than needed.
struct CKSystem {
  std::size_t m;
  SeriesMatrix a, b;
  std::vector<UniSeries> init;
  int order;
};

struct CKSolution {
  std::vector<BiSeries> u;
  int certified_order;  // the residual is exactly zero up to this degree
};

/// Order-by-order solve on u2-graded slices:
/// u_{k+1} = [A du/du1 + B u]_k / (k + 1).
CKSolution ck_solve(const CKSystem& sys);

/// du/du2 - A du/du1 - B u, truncated to sol.certified_order.
std::vector<BiSeries> ck_residual(const CKSystem& sys, const CKSolution& sol);

}  // namespace lagloci
