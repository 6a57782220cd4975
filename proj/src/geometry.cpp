//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "boxopt/errors.hpp"

namespace boxopt {

namespace {

void require_feasible(const Vector& x, const BoundSpec& bounds, const char* where) {
  if (!bounds.is_feasible(x))
    throw InfeasiblePoint(std::string(where) + ": point violates bounds");
}

}  // namespace

Vector project(const Vector& x, const BoundSpec& bounds) {
  Vector out = x;
  for (int i = 0; i < bounds.dim(); ++i) {
    if (!bounds.constrained(i)) continue;
    out[i] = std::min(std::max(out[i], 0.0), bounds.upper(i));
  }
  return out;
}

Vector projected_gradient(const Vector& x, const Vector& g, const BoundSpec& bounds) {
  require_feasible(x, bounds, "projected_gradient");
  Vector out = g;
  for (int i = 0; i < bounds.dim(); ++i) {
    if (!bounds.constrained(i)) continue;
    if (x[i] == 0.0) {
      out[i] = std::min(0.0, g[i]);
    } else if (x[i] == bounds.upper(i)) {
      out[i] = std::max(0.0, g[i]);
    }
  }
  return out;
}

IndexPartition two_metric_partition(const Vector& x, const Vector& g,
                                    const BoundSpec& bounds) {
  require_feasible(x, bounds, "two_metric_partition");
  IndexPartition part;
  for (int i = 0; i < bounds.dim(); ++i) {
    const bool at_lower = bounds.constrained(i) && x[i] == 0.0 && g[i] > 0.0;
    const bool at_upper = bounds.has_upper(i) && x[i] == bounds.upper(i) && g[i] < 0.0;
    if (at_lower || at_upper) {
      part.plus.push_back(i);
    } else {
      part.minus.push_back(i);
    }
  }
  return part;
}

DiagScaling z_scaling(const Vector& x, const Vector& g, const BoundSpec& bounds) {
  require_feasible(x, bounds, "z_scaling");
  DiagScaling z{Vector::Ones(bounds.dim())};
  for (int i = 0; i < bounds.dim(); ++i) {
    if (!bounds.constrained(i)) continue;
    const double u = bounds.upper(i);
    const bool lower_side = x[i] > 0.0 && x[i] <= u / 2.0 && g[i] > 0.0;
    const bool upper_side = x[i] > u / 2.0 && x[i] < u && g[i] < 0.0;
    if (lower_side || upper_side)
      z.diag[i] = std::min({x[i], u - x[i], 1.0});
  }
  return z;
}

IndexPartition pncg_partition(const Vector& x, const BoundSpec& bounds, double eps_k) {
  require_feasible(x, bounds, "pncg_partition");
  if (!(eps_k > 0.0 && eps_k < 1.0))
    throw ParameterOutOfRange("eps_k", eps_k, "pncg_partition: eps_k must be in (0,1)");
  IndexPartition part;
  for (int i = 0; i < bounds.dim(); ++i) {
    const bool near_lower = bounds.constrained(i) && x[i] <= eps_k;
    const bool near_upper = bounds.has_upper(i) && x[i] >= bounds.upper(i) - eps_k;
    if (near_lower || near_upper) {
      part.plus.push_back(i);
    } else {
      part.minus.push_back(i);
    }
  }
  return part;
}

DiagScaling s_scaling(const Vector& x, const IndexPartition& partition,
                      const BoundSpec& bounds) {
  DiagScaling s{Vector::Ones(bounds.dim())};
  for (int i : partition.plus)
    s.diag[i] = std::min(x[i], bounds.upper(i) - x[i]);
  return s;
}

double residual(const Vector& x, const Vector& g, const BoundSpec& bounds,
                double eps_r) {
  require_feasible(x, bounds, "residual");
  const IndexPartition part = pncg_partition(x, bounds, std::sqrt(eps_r));
  const DiagScaling s = s_scaling(x, part, bounds);
  double res = (s.diag.asDiagonal() * g).norm();
  for (int i : part.plus) {
    // Violation is a negative gradient at the lower bound, positive at the
    // upper; a coordinate near both bounds is checked against each side.
    if (x[i] <= std::sqrt(eps_r)) res = std::max(res, -g[i]);
    if (bounds.has_upper(i) && x[i] >= bounds.upper(i) - std::sqrt(eps_r))
      res = std::max(res, g[i]);
  }
  return res;
}

StationarityReport check_eps1o(const Vector& x, const Vector& g,
                               const BoundSpec& bounds, double eps) {
  StationarityReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };

  if (!bounds.is_feasible(x)) fail("point is infeasible");

  Vector zg = g;
  for (int i = 0; i < bounds.dim(); ++i) {
    if (!bounds.constrained(i)) continue;
    const double u = bounds.upper(i);
    zg[i] *= std::min({x[i], u - x[i], 1.0});
    if (x[i] <= u / 2.0) {
      if (g[i] < -eps)
        fail("grad[" + std::to_string(i) + "] = " + std::to_string(g[i]) +
             " < -eps at lower half-interval");
    } else if (g[i] > eps) {
      fail("grad[" + std::to_string(i) + "] = " + std::to_string(g[i]) +
           " > eps at upper half-interval");
    }
  }
  if (zg.norm() > eps)
    fail("||Z grad|| = " + std::to_string(zg.norm()) + " > eps");
  return rep;
}

StationarityReport check_eps2o(const Vector& x, ObjectiveOracle& oracle,
                               const BoundSpec& bounds, double eps, int dim_cap) {
  const int n = oracle.dim();
  if (n > dim_cap)
    throw DimensionTooLarge("check_eps2o: dimension " + std::to_string(n) +
                            " exceeds cap " + std::to_string(dim_cap));
  StationarityReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };

  if (!bounds.is_feasible(x)) fail("point is infeasible");

  const double root_eps = std::sqrt(eps);
  const double grad_floor = std::pow(eps, 0.75);
  const Vector g = oracle.eval_grad(x);
  const IndexPartition part = pncg_partition(x, bounds, root_eps);
  const DiagScaling s = s_scaling(x, part, bounds);

  const double sg_norm = (s.diag.asDiagonal() * g).norm();
  if (sg_norm > 2.0 * eps)
    fail("||S grad|| = " + std::to_string(sg_norm) + " > 2*eps");

  for (int i : part.plus) {
    if (x[i] <= root_eps && g[i] < -grad_floor)
      fail("grad[" + std::to_string(i) + "] = " + std::to_string(g[i]) +
           " < -eps^(3/4) near lower bound");
    if (bounds.has_upper(i) && x[i] >= bounds.upper(i) - root_eps &&
        g[i] > grad_floor)
      fail("grad[" + std::to_string(i) + "] = " + std::to_string(g[i]) +
           " > eps^(3/4) near upper bound");
  }

  // Materialize S H S column by column through the Hvp callback.
  Matrix shs(n, n);
  for (int j = 0; j < n; ++j) {
    Vector ej = Vector::Zero(n);
    ej[j] = s.diag[j];
    shs.col(j) = s.diag.asDiagonal() * oracle.eval_hvp(x, ej);
  }
  shs = 0.5 * (shs + shs.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(shs, Eigen::EigenvaluesOnly);
  const double lmin = eig.eigenvalues().minCoeff();
  if (lmin < -root_eps)
    fail("lambda_min(S H S) = " + std::to_string(lmin) + " < -sqrt(eps)");
  return rep;
}

}  // namespace boxopt
