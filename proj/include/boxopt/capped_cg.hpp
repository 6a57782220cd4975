//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_CAPPED_CG_HPP_
#define BOXOPT_CAPPED_CG_HPP_

#include <optional>
#include <vector>

#include "boxopt/oracle.hpp"
#include "boxopt/types.hpp"

namespace boxopt {

/// Hessian-vector product restricted to a principal submatrix: gathers the
/// input onto the masked coordinates, applies the full Hvp at a fixed point,
/// and scatters back. One oracle Hvp per application.
class MaskedHvp {
 public:
  MaskedHvp(ObjectiveOracle& oracle, const Vector& x, std::vector<int> mask);

  int dim() const { return static_cast<int>(mask_.size()); }
  Vector operator()(const Vector& v_masked) const;

  /// Widen a reduced vector to full dimension with zeros elsewhere.
  Vector scatter(const Vector& v_masked) const;

 private:
  ObjectiveOracle* oracle_;
  const Vector* x_;
  std::vector<int> mask_;
};

enum class CgDirectionType { SOL, NC };

struct CappedCgOutcome {
  CgDirectionType d_type = CgDirectionType::SOL;
  Vector d;
  long iters = 0;
  double M_final = 0.0;
  double kappa = 0.0;
  double zeta_hat = 0.0;
  double tau = 0.0;
  double T = 0.0;
  double residual_norm = 0.0;  // ||(H + 2 eps I) d + g|| via the CG recurrence
};

/// Conjugate gradient on the damped system (H + 2 eps I) y = -g that exits
/// early with a negative curvature direction whenever curvature below eps is
/// detected. The Hessian-norm estimate M (0 when no hint is given) grows from
/// observed products, updating kappa, tau and T; zeta_hat stays at the input
/// value. SOL outputs satisfy ||r|| <= (1/2) eps zeta ||d|| with
/// zeta = 3 kappa zeta_hat; NC outputs satisfy d'(H + 2 eps I)d < eps ||d||^2.
///
/// iter_cap <= 0 selects min(n, ceil(sqrt(kappa) ln(144 sqrt(kappa) /
/// zeta_hat^2))) + 5, re-evaluated as kappa grows.
CappedCgOutcome capped_cg(const LinOp& hvp, const Vector& g, double eps,
                          double zeta_hat, std::optional<double> M_hint = {},
                          long iter_cap = 0);

}  // namespace boxopt

#endif  // BOXOPT_CAPPED_CG_HPP_
