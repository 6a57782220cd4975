//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/two_metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boxopt/errors.hpp"
#include "src/solver_util.hpp"

namespace boxopt {

namespace {

Vector scaling_diag(const ScalingStrategy& s, ObjectiveOracle& oracle,
                    const Vector& x) {
  const int n = oracle.dim();
  Vector d = Vector::Ones(n);
  if (s.kind == ScalingStrategy::Kind::ClippedDiagonalHessian) {
    const int probes = std::min(n, s.diag_probe_limit);
    for (int i = 0; i < probes; ++i) {
      Vector ei = Vector::Zero(n);
      ei[i] = 1.0;
      const double hii = oracle.eval_hvp(x, ei)[i];
      d[i] = 1.0 / std::max(hii, 1e-8);
    }
  }
  return d.cwiseMax(s.lambda_min).cwiseMin(s.lambda_max);
}

}  // namespace

SolverReport two_metric_solve(ObjectiveOracle& oracle, const BoundSpec& bounds,
                              const Vector& x0, const SolverConfig& cfg,
                              const ScalingStrategy& scaling) {
  validate_config(cfg, bounds);
  if (!(scaling.lambda_min > 0.0 && scaling.lambda_min <= scaling.lambda_max))
    throw ParameterOutOfRange("lambda_min", scaling.lambda_min,
                              "scaling requires 0 < lambda_min <= lambda_max");

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
    const IndexPartition part = two_metric_partition(x, g, bounds);
    const DiagScaling z = z_scaling(x, g, bounds);

    double stop_norm_sq = 0.0;
    for (int i : part.minus) stop_norm_sq += z.diag[i] * z.diag[i] * g[i] * g[i];
    if (std::sqrt(stop_norm_sq) <= cfg.eps_g) {
      rep.status = SolveStatus::ConvergedEps1o;
      break;
    }
    if (k >= cfg.max_outer_iters) {
      rep.status = SolveStatus::IterLimit;
      break;
    }
    if (clock.seconds() > cfg.max_wall_seconds) {
      rep.status = SolveStatus::TimeLimit;
      break;
    }

    const Vector d_diag = scaling_diag(scaling, oracle, x);
    const Vector p = d_diag.cwiseProduct(z.diag.cwiseProduct(g));
    const Vector step = z.diag.cwiseProduct(p);  // Z D Z g

    double decrease_ref = 0.0;  // (g-)' Z- p-
    for (int i : part.minus) decrease_ref += g[i] * z.diag[i] * p[i];

    bool accepted = false;
    double alpha = 1.0;
    Vector trial;
    double f_trial = 0.0;
    for (int m = 0; m <= detail::kBacktrackCap; ++m, alpha *= cfg.beta) {
      trial = project(x - alpha * step, bounds);
      f_trial = oracle.eval_f(trial);
      if (!detail::finite(f_trial)) {
        rep.status = SolveStatus::LineSearchFailure;
        rep.warnings.push_back("oracle returned a non-finite value at a trial point");
        detail::finalize_report(rep, x, f_x, g, bounds, counters);
        return rep;
      }
      if (f_x - f_trial >= cfg.sigma * alpha * decrease_ref) {
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

    for (int i : part.plus) {
      if (trial[i] != x[i])
        throw std::logic_error("two_metric_solve: active component moved");
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
    rec.dir_norm = step.norm();
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

std::int64_t theorem31_budget(double f0, double f_low, double L_g, double U_g,
                              double lambda_min, double lambda_max, double sigma,
                              double beta, double eps, const BoundSpec& bounds) {
  if (f0 < f_low) throw ParameterOutOfRange("f_low", f_low, "requires f0 >= f_low");
  double m_u = 1.0;
  for (int i = 0; i < bounds.dim(); ++i)
    if (bounds.has_upper(i)) m_u = std::min(m_u, bounds.upper(i) / 2.0);
  const double numer =
      (f0 - f_low) * lambda_max *
      std::max({U_g / m_u, L_g / (2.0 * (1.0 - sigma)), 1.0 / lambda_max});
  const double denom = sigma * beta * lambda_min * eps * eps;
  return static_cast<std::int64_t>(std::ceil(numer / denom));
}

}  // namespace boxopt
