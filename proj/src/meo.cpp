//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/meo.hpp"

#include <algorithm>
#include <cmath>

#include "boxopt/errors.hpp"

namespace boxopt {

double estimate_norm(const LinOp& hvp, int n, Rng& rng, int iters) {
  if (iters < 1) throw ParameterOutOfRange("iters", iters, "estimate_norm: iters >= 1");
  Vector v = random_unit_vector(n, rng);
  double est = 0.0;
  for (int k = 0; k < iters; ++k) {
    Vector w = hvp(v);
    est = w.norm();
    if (est == 0.0) return 0.0;
    v = w / est;
  }
  return 1.1 * est;
}

namespace {

long lanczos_budget(int n, double eps, double delta, double u_h) {
  if (delta <= 0.0) return n;
  const double c =
      std::log(2.75 * n / (delta * delta)) * std::sqrt(u_h * std::max(1.0, eps * eps)) / 2.0;
  const double bound = 1.0 + std::ceil(c / std::sqrt(eps));
  return static_cast<long>(std::min(static_cast<double>(n), bound));
}

}  // namespace

MeoResult meo(const LinOp& hvp, int n, double eps, double delta,
              std::optional<double> M_hint, Rng& rng) {
  if (!(eps > 0.0 && eps < 1.0))
    throw ParameterOutOfRange("eps", eps, "meo: eps must be in (0,1)");
  if (!(delta >= 0.0 && delta < 1.0))
    throw ParameterOutOfRange("delta", delta, "meo: delta must be in [0,1)");
  if (n < 1) throw DimensionMismatch("meo: n must be >= 1");

  const double u_h = M_hint ? *M_hint : estimate_norm(hvp, n, rng, 25);
  const long budget = lanczos_budget(n, eps, delta, u_h);

  MeoResult res;
  Matrix q_basis(n, budget);
  Vector alphas(budget), betas(budget);
  Vector q = random_unit_vector(n, rng);
  q_basis.col(0) = q;

  long j = 0;
  for (; j < budget; ++j) {
    Vector w = hvp(q_basis.col(j));
    ++res.lanczos_iters;
    alphas[j] = q_basis.col(j).dot(w);
    w -= alphas[j] * q_basis.col(j);
    if (j > 0) w -= betas[j - 1] * q_basis.col(j - 1);
    // Full reorthogonalization, two passes.
    auto basis = q_basis.leftCols(j + 1);
    w -= basis * (basis.transpose() * w);
    w -= basis * (basis.transpose() * w);

    // Smallest Ritz pair of the (j+1)x(j+1) tridiagonal section.
    Matrix trid = Matrix::Zero(j + 1, j + 1);
    trid.diagonal() = alphas.head(j + 1);
    for (long i = 0; i < j; ++i) trid(i, i + 1) = trid(i + 1, i) = betas[i];
    Eigen::SelfAdjointEigenSolver<Matrix> eig(trid);
    long min_idx = 0;
    eig.eigenvalues().minCoeff(&min_idx);
    if (eig.eigenvalues()[min_idx] <= -eps / 2.0) {
      Vector ritz = basis * eig.eigenvectors().col(min_idx);
      ritz.normalize();
      const double lambda = ritz.dot(hvp(ritz));  // revalidate before returning
      if (lambda <= -eps / 2.0) {
        res.kind = MeoKind::NegativeCurvature;
        res.lambda = lambda;
        res.v = ritz;
        res.max_basis_dot = 0.0;
        for (long a = 0; a <= j; ++a)
          for (long b = a + 1; b <= j; ++b)
            res.max_basis_dot =
                std::max(res.max_basis_dot,
                         std::abs(q_basis.col(a).dot(q_basis.col(b))));
        return res;
      }
    }

    betas[j] = w.norm();
    const double scale = std::max(1.0, alphas.head(j + 1).cwiseAbs().maxCoeff());
    if (betas[j] <= 1e-13 * scale) {
      ++j;  // exact invariant subspace: finalize on the Krylov space found
      break;
    }
    if (j + 1 < budget) q_basis.col(j + 1) = w / betas[j];
  }

  res.kind = MeoKind::Certificate;
  res.max_basis_dot = 0.0;
  const long cols = std::min(j, budget);
  for (long a = 0; a < cols; ++a)
    for (long b = a + 1; b < cols; ++b)
      res.max_basis_dot = std::max(
          res.max_basis_dot, std::abs(q_basis.col(a).dot(q_basis.col(b))));
  return res;
}

}  // namespace boxopt
