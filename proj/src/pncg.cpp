//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/pncg.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "boxopt/capped_cg.hpp"
#include "boxopt/errors.hpp"
#include "boxopt/geometry.hpp"
#include "boxopt/meo.hpp"
#include "src/solver_util.hpp"

namespace boxopt {

namespace {

Vector gather(const Vector& v, const std::vector<int>& idx) {
  Vector out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
  return out;
}

struct LineSearchResult {
  bool accepted = false;
  bool aborted = false;  // non-finite trial value
  double alpha = 1.0;
  Vector x;
  double f = 0.0;
};

/// Smallest m with f(trial(theta^m)) < f_x - rhs(theta^m, trial).
template <typename TrialFn, typename RhsFn>
LineSearchResult line_search(ObjectiveOracle& oracle, double f_x, double theta,
                             const TrialFn& trial_at, const RhsFn& rhs_at) {
  LineSearchResult res;
  double alpha = 1.0;
  for (int m = 0; m <= detail::kBacktrackCap; ++m, alpha *= theta) {
    Vector trial = trial_at(alpha);
    const double f_trial = oracle.eval_f(trial);
    if (!detail::finite(f_trial)) {
      res.aborted = true;
      return res;
    }
    if (f_trial < f_x - rhs_at(alpha, trial)) {
      res.accepted = true;
      res.alpha = alpha;
      res.x = std::move(trial);
      res.f = f_trial;
      return res;
    }
  }
  return res;
}

}  // namespace

double adapt_zeta_hat(double zeta_hat, double zeta, double kappa, double shrink) {
  const double floor = zeta / (3.0 * kappa);
  if (zeta_hat <= floor) return zeta_hat;
  return std::max(zeta_hat / shrink, floor);
}

SolverReport pncg_solve(ObjectiveOracle& oracle, const BoundSpec& bounds,
                        const Vector& x0, const SolverConfig& cfg) {
  validate_config(cfg, bounds);

  detail::Stopwatch clock;
  detail::CounterScope counters(oracle);
  Rng rng(cfg.rng_seed);
  SolverReport rep;

  const double eps_h = cfg.eps_H;
  const double grad_floor = std::pow(eps_h, 1.5);

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

  double zeta_hat = cfg.zeta_hat_init;
  std::optional<double> m_carry = cfg.M_hint;

  auto abort_nonfinite = [&](const char* where) {
    rep.status = SolveStatus::LineSearchFailure;
    rep.warnings.push_back(std::string("oracle returned a non-finite value (") +
                           where + ")");
  };

  auto record = [&](long k, StepKind kind, const LineSearchResult& ls,
                    double dir_norm) {
    x = ls.x;
    f_x = ls.f;
    g = oracle.eval_grad(x);
    IterationRecord rec;
    rec.k = k;
    rec.f = f_x;
    rec.step_type = kind;
    rec.alpha = ls.alpha;
    rec.dir_norm = dir_norm;
    rec.residual = residual(x, g, bounds, detail::kReportEpsR);
    rec.projnorm = projected_gradient(x, g, bounds).norm();
    rec.elapsed = clock.seconds();
    rep.trace.push_back(rec);
    rep.outer_iters = k + 1;
    switch (kind) {
      case StepKind::GradProj: rep.step_counts.grad_proj++; break;
      case StepKind::NewtonCgSol: rep.step_counts.newton_sol++; break;
      case StepKind::NewtonCgNc: rep.step_counts.newton_nc++; break;
      case StepKind::MeoNc: rep.step_counts.meo_nc++; break;
      case StepKind::Terminate: break;
    }
  };

  for (long k = 0;; ++k) {
    if (k >= cfg.max_outer_iters) {
      rep.status = SolveStatus::IterLimit;
      break;
    }
    if (clock.seconds() > cfg.max_wall_seconds) {
      rep.status = SolveStatus::TimeLimit;
      break;
    }
    if (!detail::finite(g)) {
      abort_nonfinite("gradient");
      break;
    }

    const IndexPartition part = pncg_partition(x, bounds, eps_h);
    const DiagScaling s = s_scaling(x, part, bounds);

    // Branch (a): gradient projection.
    bool bad_plus_gradient = false;
    double splus_norm_sq = 0.0;
    for (int i : part.plus) {
      if (x[i] <= eps_h && g[i] < -grad_floor) bad_plus_gradient = true;
      if (bounds.has_upper(i) && x[i] >= bounds.upper(i) - eps_h &&
          g[i] > grad_floor)
        bad_plus_gradient = true;
      splus_norm_sq += s.diag[i] * s.diag[i] * g[i] * g[i];
    }
    const bool trigger_a =
        !part.plus.empty() &&
        (bad_plus_gradient || std::sqrt(splus_norm_sq) > eps_h * eps_h);

    if (trigger_a) {
      const Vector d = -g;
      auto ls = line_search(
          oracle, f_x, cfg.theta,
          [&](double a) { return project(x + a * d, bounds); },
          [&](double, const Vector& trial) { return 0.5 * (x - trial).dot(g); });
      if (ls.aborted) {
        abort_nonfinite("gradient projection trial");
        break;
      }
      if (!ls.accepted) {
        rep.status = SolveStatus::LineSearchFailure;
        rep.warnings.push_back("gradient projection line search exhausted");
        break;
      }
      record(k, StepKind::GradProj, ls, d.norm());
      continue;
    }

    // Branch (b): Newton-CG on the free block.
    double gminus_norm = 0.0;
    for (int i : part.minus) gminus_norm += g[i] * g[i];
    gminus_norm = std::sqrt(gminus_norm);

    bool fell_through = false;
    if (!part.minus.empty() && gminus_norm > cfg.eps_g) {
      const MaskedHvp h_minus(oracle, x, part.minus);
      const Vector g_minus = gather(g, part.minus);

      bool stepped = false;
      while (true) {
        CappedCgOutcome cg;
        try {
          cg = capped_cg([&](const Vector& v) { return h_minus(v); }, g_minus,
                         eps_h, zeta_hat, m_carry);
        } catch (const IterCapExceeded&) {
          fell_through = true;
          rep.warnings.push_back("capped CG hit its iteration cap (iteration " +
                                 std::to_string(k) + ")");
          break;
        }
        m_carry = cg.M_final;

        Vector d_minus;
        StepKind kind;
        if (cg.d_type == CgDirectionType::NC) {
          const Vector ht = h_minus(cg.d);
          const double curv = cg.d.dot(ht) / cg.d.squaredNorm();
          d_minus = -sgn(cg.d.dot(g_minus)) * std::abs(curv) * cg.d.normalized();
          kind = StepKind::NewtonCgNc;
        } else {
          d_minus = cg.d;
          kind = StepKind::NewtonCgSol;
        }
        const Vector d = h_minus.scatter(d_minus);  // d+ = 0
        const double d_norm_sq = d.squaredNorm();

        auto ls = line_search(
            oracle, f_x, cfg.theta,
            [&](double a) { return project(x + a * d, bounds); },
            [&](double a, const Vector&) { return cfg.eta * a * a * eps_h * d_norm_sq; });
        if (ls.aborted) {
          abort_nonfinite("Newton-CG trial");
          break;
        }
        if (ls.accepted) {
          record(k, kind, ls, std::sqrt(d_norm_sq));
          stepped = true;
          break;
        }
        const double shrunk = adapt_zeta_hat(zeta_hat, cfg.zeta, cg.kappa,
                                             cfg.zeta_hat_shrink);
        if (shrunk == zeta_hat) {
          fell_through = true;  // already at the floor; escalate to branch (c)
          rep.warnings.push_back(
              "Newton-CG line search failed at the zeta_hat floor (iteration " +
              std::to_string(k) + ")");
          break;
        }
        zeta_hat = shrunk;
      }
      if (rep.status == SolveStatus::LineSearchFailure) break;
      if (stepped) continue;
      if (!fell_through) break;  // aborted inside the retry loop
    }

    // Branch (c): MEO on S H S, or first-order termination without it.
    if (!cfg.meo_enabled) {
      if (fell_through) {
        rep.status = SolveStatus::LineSearchFailure;
        rep.warnings.push_back("Newton-CG made no progress and MEO is disabled");
      } else {
        rep.status = SolveStatus::ConvergedEps1o;
      }
      break;
    }

    const LinOp scaled_hvp = [&](const Vector& v) {
      return s.diag.asDiagonal() *
             oracle.eval_hvp(x, s.diag.asDiagonal() * v);
    };
    rep.meo_calls++;
    const MeoResult mr = meo(scaled_hvp, bounds.dim(), eps_h, cfg.delta, m_carry, rng);
    if (mr.kind == MeoKind::Certificate) {
      if (fell_through) {
        rep.status = SolveStatus::LineSearchFailure;
        rep.warnings.push_back(
            "MEO certified the scaled Hessian but first-order conditions were "
            "not reached");
      } else {
        rep.status = SolveStatus::ConvergedEps2o;
      }
      break;
    }

    const Vector d = -sgn(g.dot(s.diag.asDiagonal() * mr.v)) *
                     std::abs(mr.lambda) * mr.v;
    const double d_norm = d.norm();
    auto ls = line_search(
        oracle, f_x, cfg.theta,
        [&](double a) {
          return project(x + a * (s.diag.asDiagonal() * d), bounds);
        },
        [&](double a, const Vector&) {
          return cfg.eta * a * a * d_norm * d_norm * d_norm;
        });
    if (ls.aborted) {
      abort_nonfinite("negative curvature trial");
      break;
    }
    if (!ls.accepted) {
      rep.status = SolveStatus::LineSearchFailure;
      rep.warnings.push_back("negative curvature line search exhausted");
      break;
    }
    record(k, StepKind::MeoNc, ls, d_norm);
  }

  detail::finalize_report(rep, x, f_x, g, bounds, counters);
  return rep;
}

std::int64_t kpncg_budget(double f0, double f_low, double L_g, double L_H,
                          double theta, double zeta, double eta, double eps_g,
                          double eps_H) {
  if (f0 < f_low) throw ParameterOutOfRange("f_low", f_low, "requires f0 >= f_low");
  const double c_nc =
      eta * std::min(L_H > 0.0 ? std::pow((3.0 - 6.0 * eta) * theta / L_H, 2) : kInf,
                     theta * theta);
  const double c_sol =
      eta *
      std::min({std::pow(4.0 / (4.0 + zeta + std::sqrt(std::pow(4.0 + zeta, 2) +
                                                       8.0 * L_H)),
                         2),
                theta * theta,
                L_H > 0.0 ? 9.0 * std::pow((1.0 - zeta - 2.0 * eta) * theta / L_H, 2)
                          : kInf,
                std::pow((1.0 - zeta) * theta / (L_H / 3.0 + 2.0 * eta), 2)});
  const double denom = std::min({c_nc, 8.0 * c_sol, 2.0 * theta / L_g, eta});
  const double scale =
      std::max(eps_H / (eps_g * eps_g), 1.0 / (eps_H * eps_H * eps_H));
  return static_cast<std::int64_t>(
             std::floor(16.0 * (f0 - f_low) / denom * scale)) +
         2;
}

}  // namespace boxopt
