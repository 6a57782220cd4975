//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/oracle.hpp"

#include <algorithm>
#include <utility>

#include "boxopt/errors.hpp"

namespace boxopt {

ObjectiveOracle::ObjectiveOracle(int dim, FFn f, GradFn grad, HvpFn hvp)
    : dim_(dim), f_(std::move(f)), grad_(std::move(grad)), hvp_(std::move(hvp)) {
  if (dim_ <= 0) throw DimensionMismatch("oracle dimension must be positive");
}

double ObjectiveOracle::eval_f(const Vector& x) {
  if (x.size() != dim_) throw DimensionMismatch("eval_f: x size != dim");
  ++f_evals_;
  return f_(x);
}

Vector ObjectiveOracle::eval_grad(const Vector& x) {
  if (x.size() != dim_) throw DimensionMismatch("eval_grad: x size != dim");
  ++grad_evals_;
  return grad_(x);
}

Vector ObjectiveOracle::eval_hvp(const Vector& x, const Vector& v) {
  if (x.size() != dim_ || v.size() != dim_)
    throw DimensionMismatch("eval_hvp: argument size != dim");
  ++hvp_evals_;
  return hvp_(x, v);
}

void ObjectiveOracle::reset_counters() {
  f_evals_ = grad_evals_ = hvp_evals_ = 0;
}

double finite_diff_check(ObjectiveOracle& oracle, const Vector& x, int n_dirs,
                         double h, std::uint64_t seed) {
  Rng rng(seed);
  const int n = oracle.dim();
  const Vector g = oracle.eval_grad(x);
  double worst = 0.0;
  for (int k = 0; k < n_dirs; ++k) {
    const Vector v = random_unit_vector(n, rng);

    const double fd_dir =
        (oracle.eval_f(x + h * v) - oracle.eval_f(x - h * v)) / (2.0 * h);
    const double an_dir = g.dot(v);
    const double scale1 = std::max({1.0, std::abs(an_dir), std::abs(fd_dir)});
    worst = std::max(worst, std::abs(fd_dir - an_dir) / scale1);

    const Vector fd_hvp =
        (oracle.eval_grad(x + h * v) - oracle.eval_grad(x - h * v)) / (2.0 * h);
    const Vector an_hvp = oracle.eval_hvp(x, v);
    const double scale2 = std::max({1.0, an_hvp.norm(), fd_hvp.norm()});
    worst = std::max(worst, (fd_hvp - an_hvp).norm() / scale2);
  }
  return worst;
}

}  // namespace boxopt
