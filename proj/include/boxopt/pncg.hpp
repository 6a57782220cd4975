//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_PNCG_HPP_
#define BOXOPT_PNCG_HPP_

#include <cstdint>

#include "boxopt/bounds.hpp"
#include "boxopt/config.hpp"
#include "boxopt/oracle.hpp"
#include "boxopt/report.hpp"

namespace boxopt {

/// Projected Newton-CG. Each iteration dispatches, in order:
///  (a) a gradient projection step when some near-active gradient component
///      is strongly negative (strongly positive near an upper bound) or
///      ||S+ g+|| > eps_H^2;
///  (b) a Newton-CG step on the free block via capped CG when ||g-|| > eps_g,
///      using either the approximate Newton solution or the rescaled negative
///      curvature direction;
///  (c) otherwise the MEO on S H S: a certificate stops the solver
///      (ConvergedEps2o), a negative-curvature direction gives a scaled step.
/// With meo_enabled = false, reaching (c) stops with ConvergedEps1o.
///
/// Newton-CG line-search failures shrink the CG accuracy zeta_hat by
/// cfg.zeta_hat_shrink down to zeta/(3 kappa) and retry; at the floor the
/// iteration falls through to branch (c).
SolverReport pncg_solve(ObjectiveOracle& oracle, const BoundSpec& bounds,
                        const Vector& x0, const SolverConfig& cfg);

/// Worst-case outer-iteration bound
///   floor( 16 (f0 - f_low) / min{c_nc, 8 c_sol, 2 theta / L_g, eta}
///          * max{eps_g^-2 eps_H, eps_H^-3} ) + 2
/// with the per-step decrease constants
///   c_nc  = eta min{ (3-6 eta)^2 theta^2 / L_H^2, theta^2 },
///   c_sol = eta min{ (4 / (4 + zeta + sqrt((4+zeta)^2 + 8 L_H)))^2, theta^2,
///                    9 (1-zeta-2 eta)^2 theta^2 / L_H^2,
///                    (1-zeta)^2 theta^2 / (L_H/3 + 2 eta)^2 }.
/// L_H = 0 (e.g. quadratics) drops the divide-by-L_H terms.
std::int64_t kpncg_budget(double f0, double f_low, double L_g, double L_H,
                          double theta, double zeta, double eta, double eps_g,
                          double eps_H);

/// One accuracy-shrink update: max(zeta_hat / shrink, zeta / (3 kappa)).
/// Returns the input unchanged when already at the floor.
double adapt_zeta_hat(double zeta_hat, double zeta, double kappa, double shrink);

}  // namespace boxopt

#endif  // BOXOPT_PNCG_HPP_
