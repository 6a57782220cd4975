//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_NMF_HPP_
#define BOXOPT_NMF_HPP_

#include <cstdint>
#include <utility>

#include "boxopt/bounds.hpp"
#include "boxopt/oracle.hpp"
#include "boxopt/pgrad.hpp"
#include "boxopt/report.hpp"
#include "boxopt/types.hpp"

namespace boxopt {

/// min over W >= 0, Y >= 0 of F(W,Y) = (1/2) ||W Y - V||_F^2. The flat
/// variable vector packs W (m x r) column-major first, then Y (r x n)
/// column-major; every component is nonnegativity-constrained.
struct NmfProblem {
  Matrix V;
  int r = 1;

  int m() const { return static_cast<int>(V.rows()); }
  int n() const { return static_cast<int>(V.cols()); }
  int dim() const { return m() * r + r * n(); }
  BoundSpec bounds() const { return BoundSpec::nonnegative(dim()); }
};

Vector nmf_pack(const NmfProblem& prob, const Matrix& w, const Matrix& y);
std::pair<Matrix, Matrix> nmf_unpack(const NmfProblem& prob, const Vector& x);

/// Matrix-free oracle for F. Gradient blocks are (WY - V) Y' and W'(WY - V);
/// the Hessian-vector product for (dW, dY) is
///   ( (dW Y + W dY) Y' + (WY - V) dY',  W'(dW Y + W dY) + dW'(WY - V) ).
/// Each call costs O(m n r).
ObjectiveOracle nmf_oracle(const NmfProblem& prob);

struct SyntheticNmf {
  NmfProblem prob;
  Matrix w_true;  // pre-normalization ground truth
  Matrix y_true;
  double zero_frac_w = 0.0;
  double zero_frac_y = 0.0;
  double v_scale = 1.0;  // divisor applied so that mean |V_ij| = 1
};

/// Synthetic data: half-normal factors with ~60% of entries zeroed, 5%
/// relative Gaussian noise, V normalized to unit average magnitude.
/// Deterministic given the seed.
SyntheticNmf gen_synthetic(int m, int n, int r, std::uint64_t seed);

/// Half-normal initial factors, each block normalized to unit average
/// elementwise magnitude. Deterministic given the seed.
std::pair<Matrix, Matrix> nmf_random_init(int m, int n, int r, std::uint64_t seed);

struct SaddleStart {
  NmfProblem prob;  // rank r_target problem over the generated V
  Matrix w0;        // (1/5) w * ones(1, r_target)
  Matrix y0;        // (1/2) ones(r_target, 1) * y
  double rank1_projnorm = 0.0;
  double saddle_projnorm = 0.0;
  double f0 = 0.0;
};

/// First-order stationary point of the rank-r_target problem built by
/// replicating a rank-1 stationary pair. The rank-1 pair is obtained with
/// the projected gradient method at tolerance rank1_tol; throws
/// Rank1SolveFailed if that pre-solve does not converge, or if the replicated
/// point's projected gradient exceeds 10x the rank-1 one.
SaddleStart build_saddle(int m, int n, std::uint64_t seed, int r_target = 10,
                         double rank1_tol = 1e-7);

/// Projected gradient method applied to the NMF problem from factors
/// (w0, y0); stops when ||grad^P F||_F <= tol.
SolverReport pgrad_nmf(const NmfProblem& prob, const Matrix& w0, const Matrix& y0,
                       double beta, double sigma, double tol, long max_outer_iters,
                       double max_wall_seconds);

}  // namespace boxopt

#endif  // BOXOPT_NMF_HPP_
