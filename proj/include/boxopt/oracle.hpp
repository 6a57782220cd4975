//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_ORACLE_HPP_
#define BOXOPT_ORACLE_HPP_

#include <cstdint>
#include <functional>

#include "boxopt/types.hpp"

namespace boxopt {

/// Matrix-free problem oracle: f(x), grad f(x), and Hessian-vector products
/// hess f(x) * v. Callbacks must be deterministic in their arguments. Every
/// call is counted exactly once; counters are the only mutable state.
class ObjectiveOracle {
 public:
  using FFn = std::function<double(const Vector&)>;
  using GradFn = std::function<Vector(const Vector&)>;
  using HvpFn = std::function<Vector(const Vector&, const Vector&)>;

  ObjectiveOracle(int dim, FFn f, GradFn grad, HvpFn hvp);

  int dim() const { return dim_; }

  double eval_f(const Vector& x);
  Vector eval_grad(const Vector& x);
  Vector eval_hvp(const Vector& x, const Vector& v);

  std::uint64_t f_evals() const { return f_evals_; }
  std::uint64_t grad_evals() const { return grad_evals_; }
  std::uint64_t hvp_evals() const { return hvp_evals_; }
  void reset_counters();

 private:
  int dim_;
  FFn f_;
  GradFn grad_;
  HvpFn hvp_;
  std::uint64_t f_evals_ = 0;
  std::uint64_t grad_evals_ = 0;
  std::uint64_t hvp_evals_ = 0;
};

/// Max relative error, over `n_dirs` random unit directions, between central
/// finite differences of f (resp. grad) and the oracle's gradient (resp.
/// Hessian-vector product). Exact up to rounding for quadratics.
double finite_diff_check(ObjectiveOracle& oracle, const Vector& x, int n_dirs,
                         double h, std::uint64_t seed);

}  // namespace boxopt

#endif  // BOXOPT_ORACLE_HPP_
