//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/config.hpp"

#include <string>

#include "boxopt/errors.hpp"

namespace boxopt {

namespace {

void require_open01(const char* name, double v) {
  if (!(v > 0.0 && v < 1.0))
    throw ParameterOutOfRange(name, v, std::string(name) + " must be in (0,1), got " +
                                           std::to_string(v));
}

}  // namespace

void validate_config(const SolverConfig& cfg, const BoundSpec& bounds) {
  require_open01("eps_g", cfg.eps_g);
  require_open01("eps_H", cfg.eps_H);
  require_open01("theta", cfg.theta);
  require_open01("zeta", cfg.zeta);
  require_open01("sigma", cfg.sigma);
  require_open01("beta", cfg.beta);
  require_open01("zeta_hat_init", cfg.zeta_hat_init);
  if (!(cfg.eta > 0.0 && cfg.eta < (1.0 - cfg.zeta) / 2.0))
    throw ParameterOutOfRange("eta", cfg.eta,
                              "eta must be in (0, (1-zeta)/2) = (0, " +
                                  std::to_string((1.0 - cfg.zeta) / 2.0) + "), got " +
                                  std::to_string(cfg.eta));
  if (!(cfg.delta >= 0.0 && cfg.delta < 1.0))
    throw ParameterOutOfRange("delta", cfg.delta, "delta must be in [0,1)");
  if (!(cfg.zeta_hat_shrink > 1.0))
    throw ParameterOutOfRange("zeta_hat_shrink", cfg.zeta_hat_shrink,
                              "zeta_hat_shrink must be > 1");
  if (cfg.M_hint && !(*cfg.M_hint >= 0.0))
    throw ParameterOutOfRange("M_hint", *cfg.M_hint, "M_hint must be >= 0");
  if (cfg.max_outer_iters < 1)
    throw ParameterOutOfRange("max_outer_iters", double(cfg.max_outer_iters),
                              "max_outer_iters must be >= 1");
  if (!(cfg.max_wall_seconds > 0.0))
    throw ParameterOutOfRange("max_wall_seconds", cfg.max_wall_seconds,
                              "max_wall_seconds must be > 0");

  for (int i = 0; i < bounds.dim(); ++i) {
    if (bounds.has_upper(i) && 2.0 * cfg.eps_H > bounds.upper(i))
      throw ParameterOutOfRange("eps_H", cfg.eps_H,
                                "two-sided bounds require 2*eps_H <= u[" +
                                    std::to_string(i) + "] = " +
                                    std::to_string(bounds.upper(i)));
  }
}

}  // namespace boxopt
