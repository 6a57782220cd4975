//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_CONFIG_HPP_
#define BOXOPT_CONFIG_HPP_

#include <cstdint>
#include <optional>

#include "boxopt/bounds.hpp"

namespace boxopt {

/// Shared solver parameters. Defaults reproduce the reference experimental
/// setup: eps_g = 1e-6, eps_H = sqrt(eps_g), theta = zeta = 1/2, eta = 0.2,
/// adaptive CG accuracy starting at 0.1 shrinking by 10x, delta = 0.01.
struct SolverConfig {
  double eps_g = 1e-6;   // first-order tolerance
  double eps_H = 1e-3;   // constant epsilon_k schedule (second-order scale)
  double theta = 0.5;    // PNCG backtracking factor
  double zeta = 0.5;     // CG relative accuracy
  double eta = 0.2;      // PNCG step acceptance, must be < (1 - zeta)/2
  double sigma = 0.5;    // two-metric / pgrad step acceptance
  double beta = 0.5;     // two-metric / pgrad backtracking factor
  double delta = 0.01;   // MEO failure probability
  std::optional<double> M_hint;  // upper bound on Hessian norm, if known
  long max_outer_iters = 5000;
  double max_wall_seconds = 100.0;
  std::uint64_t rng_seed = 0;
  bool meo_enabled = false;
  double zeta_hat_init = 0.1;
  double zeta_hat_shrink = 10.0;
};

/// Throws ParameterOutOfRange unless every parameter is in range and, for
/// two-sided problems, 2*eps_H <= min upper bound.
void validate_config(const SolverConfig& cfg, const BoundSpec& bounds);

}  // namespace boxopt

#endif  // BOXOPT_CONFIG_HPP_
