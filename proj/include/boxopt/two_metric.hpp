//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_TWO_METRIC_HPP_
#define BOXOPT_TWO_METRIC_HPP_

#include <cstdint>

#include "boxopt/bounds.hpp"
#include "boxopt/config.hpp"
#include "boxopt/geometry.hpp"
#include "boxopt/oracle.hpp"
#include "boxopt/report.hpp"

namespace boxopt {

/// Choice of the SPD scaling D_k. Identity gives D = I. ClippedDiagonalHessian
/// probes Hessian diagonal entries with basis-vector Hvps (at most
/// diag_probe_limit per iteration, remaining entries stay at 1) and sets
/// D[i,i] = clamp(1 / max(H[i,i], 1e-8), lambda_min, lambda_max). Either way
/// D is diagonal, so it is trivially diagonal with respect to the active set,
/// with spectrum inside [lambda_min, lambda_max].
struct ScalingStrategy {
  enum class Kind { Identity, ClippedDiagonalHessian };
  Kind kind = Kind::Identity;
  double lambda_min = 1.0;
  double lambda_max = 1.0;
  int diag_probe_limit = 256;
};

/// Scaled two-metric projection: x_{k+1} = P(x_k - alpha Z D Z g) with
/// backtracking acceptance f(x_k) - f(x_k(alpha)) >= sigma alpha (g-)' Z- p-,
/// stopping when ||Z- g-|| <= eps_g. Uses cfg.eps_g, sigma, beta and the
/// iteration/time limits.
SolverReport two_metric_solve(ObjectiveOracle& oracle, const BoundSpec& bounds,
                              const Vector& x0, const SolverConfig& cfg,
                              const ScalingStrategy& scaling = {});

/// Worst-case iteration bound for the two-metric method:
///   ceil( (f0 - f_low) lambda_max max{U_g / m_u, L_g / (2(1-sigma)),
///         1/lambda_max} / (sigma beta lambda_min eps^2) ),
/// where m_u = min over constrained i of min{1, u^i/2} (1 when no finite
/// upper bounds).
std::int64_t theorem31_budget(double f0, double f_low, double L_g, double U_g,
                              double lambda_min, double lambda_max, double sigma,
                              double beta, double eps, const BoundSpec& bounds);

}  // namespace boxopt

#endif  // BOXOPT_TWO_METRIC_HPP_
