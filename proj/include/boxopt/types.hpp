//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_TYPES_HPP_
#define BOXOPT_TYPES_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace boxopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

/// A matrix-free symmetric linear operator v -> A*v.
using LinOp = std::function<Vector(const Vector&)>;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Sign convention with sgn(0) = +1, as used by the solvers' direction
/// rescaling rules.
inline double sgn(double z) { return z >= 0.0 ? 1.0 : -1.0; }

/// Uniform draw in [0, 1) with 53 random bits, independent of the standard
/// library's distribution implementations.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal draw (Box-Muller); two engine calls per sample so the
/// stream is fully specified by this code.
inline double normal01(Rng& rng) {
  const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

inline Vector random_unit_vector(int n, Rng& rng) {
  Vector v(n);
  double nrm = 0.0;
  do {
    for (int i = 0; i < n; ++i) v[i] = normal01(rng);
    nrm = v.norm();
  } while (nrm == 0.0);
  return v / nrm;
}

}  // namespace boxopt

#endif  // BOXOPT_TYPES_HPP_
