//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/pgrad.hpp"

#include <cmath>

#include "boxopt/errors.hpp"
#include "boxopt/geometry.hpp"
#include "src/solver_util.hpp"

namespace boxopt {

SolverReport pgrad_solve(ObjectiveOracle& oracle, const BoundSpec& bounds,
                         const Vector& x0, const PgradOptions& opts) {
  if (!(opts.beta > 0.0 && opts.beta < 1.0))
    throw ParameterOutOfRange("beta", opts.beta, "pgrad: beta must be in (0,1)");
  if (!(opts.sigma > 0.0 && opts.sigma < 1.0))
    throw ParameterOutOfRange("sigma", opts.sigma, "pgrad: sigma must be in (0,1)");
  if (!(opts.tol > 0.0))
    throw ParameterOutOfRange("tol", opts.tol, "pgrad: tol must be > 0");

  detail::Stopwatch clock;
  detail::CounterScope counters(oracle);
  SolverReport rep;

  Vector x = project(x0, bounds);
  if ((x - x0).norm() != 0.0)
    rep.warnings.push_back("infeasible x0 projected onto the feasible box");
  double f_x = oracle.eval_f(x);
  Vector g = oracle.eval_grad(x);
  if (!detail::finite(f_x) || !detail::finite(g)) {
    rep.status = SolveStatus::LineSearchFailure;
    rep.warnings.push_back("oracle returned a non-finite value at x0");
    detail::finalize_report(rep, x, f_x, g, bounds, counters);
    return rep;
  }

  for (long k = 0;; ++k) {
    if (projected_gradient(x, g, bounds).norm() <= opts.tol) {
      rep.status = SolveStatus::ConvergedEps1o;
      break;
    }
    if (k >= opts.max_outer_iters) {
      rep.status = SolveStatus::IterLimit;
      break;
    }
    if (clock.seconds() > opts.max_wall_seconds) {
      rep.status = SolveStatus::TimeLimit;
      break;
    }

    bool accepted = false;
    double alpha = 1.0;
    Vector trial;
    double f_trial = 0.0;
    for (int m = 0; m <= detail::kBacktrackCap; ++m, alpha *= opts.beta) {
      trial = project(x - alpha * g, bounds);
      f_trial = oracle.eval_f(trial);
      if (!detail::finite(f_trial)) {
        rep.status = SolveStatus::LineSearchFailure;
        rep.warnings.push_back("oracle returned a non-finite value at a trial point");
        detail::finalize_report(rep, x, f_x, g, bounds, counters);
        return rep;
      }
      if (f_x - f_trial > opts.sigma * (x - trial).dot(g)) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      rep.status = SolveStatus::LineSearchFailure;
      rep.warnings.push_back("backtracking exhausted " +
                             std::to_string(detail::kBacktrackCap) + " halvings");
      break;
    }

    x = trial;
    f_x = f_trial;
    g = oracle.eval_grad(x);
    if (!detail::finite(g)) {
      rep.status = SolveStatus::LineSearchFailure;
      rep.warnings.push_back("oracle returned a non-finite gradient");
      break;
    }

    IterationRecord rec;
    rec.k = k;
    rec.f = f_x;
    rec.step_type = StepKind::GradProj;
    rec.alpha = alpha;
    rec.dir_norm = g.norm();
    rec.residual = residual(x, g, bounds, detail::kReportEpsR);
    rec.projnorm = projected_gradient(x, g, bounds).norm();
    rec.elapsed = clock.seconds();
    rep.trace.push_back(rec);
    rep.step_counts.grad_proj++;
    rep.outer_iters = k + 1;
  }

  detail::finalize_report(rep, x, f_x, g, bounds, counters);
  return rep;
}

}  // namespace boxopt
