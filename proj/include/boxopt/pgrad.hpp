//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_PGRAD_HPP_
#define BOXOPT_PGRAD_HPP_

#include "boxopt/bounds.hpp"
#include "boxopt/oracle.hpp"
#include "boxopt/report.hpp"

namespace boxopt {

struct PgradOptions {
  double beta = 0.5;   // backtracking factor
  double sigma = 0.5;  // step acceptance parameter
  double tol = 1e-4;   // stop when ||projected gradient|| <= tol
  long max_outer_iters = 5000;
  double max_wall_seconds = 100.0;
};

/// Projected gradient method with the Armijo rule along the projection arc:
/// x(alpha) = P(x - alpha g), accepting the smallest m with
///   f(x_k) - f(x(beta^m)) > sigma <x_k - x(beta^m), g_k>.
SolverReport pgrad_solve(ObjectiveOracle& oracle, const BoundSpec& bounds,
                         const Vector& x0, const PgradOptions& opts = {});

}  // namespace boxopt

#endif  // BOXOPT_PGRAD_HPP_
