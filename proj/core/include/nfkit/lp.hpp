#pragma once

#include "nfkit/matrix.hpp"

namespace nfkit {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;   // meaningful only when Optimal
  RatVector point;  // an optimal vertex when Optimal
};

// maximize c.x subject to A x = b, x >= 0. Exact two-phase simplex with Bland's rule.
LpResult lp_max(const RatVector& c, const Matrix& a, const RatVector& b);

}  // namespace nfkit
