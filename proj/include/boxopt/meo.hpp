//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_MEO_HPP_
#define BOXOPT_MEO_HPP_

#include <optional>

#include "boxopt/types.hpp"

namespace boxopt {

enum class MeoKind { Certificate, NegativeCurvature };

struct MeoResult {
  MeoKind kind = MeoKind::Certificate;
  double lambda = 0.0;      // NC only: v' H v <= -eps/2, revalidated
  Vector v;                 // NC only: unit direction
  long lanczos_iters = 0;   // Hvp count of the Lanczos loop itself
  double max_basis_dot = 0.0;  // orthogonality diagnostic max_{i<j} |q_i' q_j|
};

/// Minimum eigenvalue oracle. Runs Lanczos with full reorthogonalization from
/// a uniformly random unit start for at most
///   N = min{ n, 1 + ceil(C eps^{-1/2}) },  C = ln(2.75 n / delta^2)
///       * sqrt(U_H max{1, eps^2}) / 2
/// iterations, checking the smallest Ritz value each iteration. A Ritz value
/// <= -eps/2 yields a validated negative-curvature pair; budget exhaustion
/// (or exact Lanczos breakdown) yields a certificate that lambda_min >= -eps,
/// wrong with probability at most delta. delta = 0 forces N = n. U_H comes
/// from M_hint when given, otherwise from a power-iteration estimate.
MeoResult meo(const LinOp& hvp, int n, double eps, double delta,
              std::optional<double> M_hint, Rng& rng);

/// Power-iteration estimate of ||H||, inflated by 1.1.
double estimate_norm(const LinOp& hvp, int n, Rng& rng, int iters);

}  // namespace boxopt

#endif  // BOXOPT_MEO_HPP_
