//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_GEOMETRY_HPP_
#define BOXOPT_GEOMETRY_HPP_

#include <string>
#include <vector>

#include "boxopt/bounds.hpp"
#include "boxopt/oracle.hpp"
#include "boxopt/types.hpp"

namespace boxopt {

/// Disjoint split of {0..n-1} into an apparently-active set (`plus`) and its
/// complement (`minus`), both sorted ascending.
struct IndexPartition {
  std::vector<int> plus;
  std::vector<int> minus;
};

/// Diagonal scaling matrix stored as its diagonal; entries on the minus set
/// are exactly 1.
struct DiagScaling {
  Vector diag;
};

/// Componentwise clamp onto the feasible box: mid(0, x^i, u^i) on constrained
/// indices, identity elsewhere. Idempotent and nonexpansive.
Vector project(const Vector& x, const BoundSpec& bounds);

/// Projected gradient: g^i clipped to min{0,g^i} at an active lower bound and
/// to max{0,g^i} at an active upper bound; plain g^i elsewhere.
Vector projected_gradient(const Vector& x, const Vector& g, const BoundSpec& bounds);

/// Exact active-set split used by the two-metric method: plus holds indices
/// with x^i = 0, g^i > 0 (and x^i = u^i, g^i < 0 for finite upper bounds).
IndexPartition two_metric_partition(const Vector& x, const Vector& g,
                                    const BoundSpec& bounds);

/// Two-metric diagonal scaling: z^i = min{x^i, u^i - x^i, 1} on constrained
/// indices whose gradient pushes toward the nearer bound (g > 0 on the lower
/// half-interval, g < 0 on the upper), and 1 otherwise.
DiagScaling z_scaling(const Vector& x, const Vector& g, const BoundSpec& bounds);

/// Threshold split used by projected Newton-CG: plus holds constrained
/// indices with x^i <= eps_k (or x^i >= u^i - eps_k), closed inequalities.
IndexPartition pncg_partition(const Vector& x, const BoundSpec& bounds, double eps_k);

/// Newton-CG scaling: s^i = x^i (one-sided) or min{x^i, u^i - x^i}
/// (two-sided) on the plus set, 1 on the minus set.
DiagScaling s_scaling(const Vector& x, const IndexPartition& partition,
                      const BoundSpec& bounds);

/// Stationarity residual max{ ||S g||, worst bound-side gradient violation on
/// the near-active set }, where the near-active threshold is sqrt(eps_r).
double residual(const Vector& x, const Vector& g, const BoundSpec& bounds,
                double eps_r);

struct StationarityReport {
  bool ok = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

/// Approximate first-order test: feasibility, ||Z g|| <= eps with
/// z^i = min{x^i, u^i - x^i, 1} on constrained indices, and the componentwise
/// gradient sign conditions (split at u^i/2 for two-sided bounds).
StationarityReport check_eps1o(const Vector& x, const Vector& g,
                               const BoundSpec& bounds, double eps);

/// Approximate second-order test: the eps-1o style conditions at thresholds
/// sqrt(eps) / eps^{3/4} / 2*eps plus lambda_min(S H S) >= -sqrt(eps),
/// verified by a dense symmetric eigensolve built from n Hessian-vector
/// products. Intended as a checker, not a solver component.
StationarityReport check_eps2o(const Vector& x, ObjectiveOracle& oracle,
                               const BoundSpec& bounds, double eps,
                               int dim_cap = 10000);

}  // namespace boxopt

#endif  // BOXOPT_GEOMETRY_HPP_
