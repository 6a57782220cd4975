//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/quadratic.hpp"

#include <memory>
#include <utility>

namespace boxopt {

ObjectiveOracle quadratic_oracle(QuadraticProblem prob) {
  auto data = std::make_shared<QuadraticProblem>(std::move(prob));
  const int n = static_cast<int>(data->A.rows());
  return ObjectiveOracle(
      n,
      [data](const Vector& x) {
        return 0.5 * x.dot(data->A * x) + data->b.dot(x);
      },
      [data](const Vector& x) -> Vector { return data->A * x + data->b; },
      [data](const Vector&, const Vector& v) -> Vector { return data->A * v; });
}

QuadraticProblem random_quadratic(int n, double eig_lo, double eig_hi, Rng& rng) {
  Matrix raw(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) raw(i, j) = normal01(rng);
  const Eigen::HouseholderQR<Matrix> qr(raw);
  const Matrix q = qr.householderQ();

  Vector eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = eig_lo + (eig_hi - eig_lo) * uniform01(rng);

  QuadraticProblem prob;
  prob.A = q * eigs.asDiagonal() * q.transpose();
  prob.A = 0.5 * (prob.A + prob.A.transpose()).eval();
  prob.b = Vector(n);
  for (int i = 0; i < n; ++i) prob.b[i] = normal01(rng);
  return prob;
}

double spectral_norm_sym(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(a, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace boxopt
