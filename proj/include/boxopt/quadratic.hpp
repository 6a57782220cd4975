//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_QUADRATIC_HPP_
#define BOXOPT_QUADRATIC_HPP_

#include "boxopt/oracle.hpp"
#include "boxopt/types.hpp"

namespace boxopt {

/// f(x) = (1/2) x'Ax + b'x with symmetric A. Gradient Lipschitz constant is
/// ||A||_2, Hessian Lipschitz constant is 0.
struct QuadraticProblem {
  Matrix A;
  Vector b;
};

ObjectiveOracle quadratic_oracle(QuadraticProblem prob);

/// Symmetric matrix with eigenvalues drawn uniformly from [eig_lo, eig_hi]
/// in a random orthogonal frame, plus a standard normal linear term.
QuadraticProblem random_quadratic(int n, double eig_lo, double eig_hi, Rng& rng);

/// ||A||_2 of a symmetric matrix (largest absolute eigenvalue).
double spectral_norm_sym(const Matrix& a);

}  // namespace boxopt

#endif  // BOXOPT_QUADRATIC_HPP_
