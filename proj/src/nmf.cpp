//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/nmf.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "boxopt/errors.hpp"
#include "boxopt/geometry.hpp"

namespace boxopt {

namespace {

using ConstMap = Eigen::Map<const Matrix>;
using MutMap = Eigen::Map<Matrix>;

ConstMap w_view(const Vector& x, int m, int r) { return {x.data(), m, r}; }

ConstMap y_view(const Vector& x, int m, int r, int n) {
  return {x.data() + static_cast<std::ptrdiff_t>(m) * r, r, n};
}

Matrix half_normal(int rows, int cols, Rng& rng) {
  Matrix a(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) a(i, j) = std::abs(normal01(rng));
  return a;
}

double zero_out(Matrix& a, double prob, Rng& rng) {
  long zeros = 0;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (uniform01(rng) < prob) {
        a(i, j) = 0.0;
        ++zeros;
      }
  return static_cast<double>(zeros) / static_cast<double>(a.size());
}

}  // namespace

Vector nmf_pack(const NmfProblem& prob, const Matrix& w, const Matrix& y) {
  if (w.rows() != prob.m() || w.cols() != prob.r || y.rows() != prob.r ||
      y.cols() != prob.n())
    throw DimensionMismatch("nmf_pack: factor shapes do not match the problem");
  Vector x(prob.dim());
  MutMap(x.data(), prob.m(), prob.r) = w;
  MutMap(x.data() + static_cast<std::ptrdiff_t>(prob.m()) * prob.r, prob.r,
         prob.n()) = y;
  return x;
}

std::pair<Matrix, Matrix> nmf_unpack(const NmfProblem& prob, const Vector& x) {
  if (x.size() != prob.dim()) throw DimensionMismatch("nmf_unpack: bad vector size");
  return {w_view(x, prob.m(), prob.r), y_view(x, prob.m(), prob.r, prob.n())};
}

ObjectiveOracle nmf_oracle(const NmfProblem& prob) {
  if (prob.r < 1 || prob.m() < 1 || prob.n() < 1)
    throw DimensionMismatch("nmf_oracle: dimensions must be positive");
  auto data = std::make_shared<NmfProblem>(prob);
  const int m = prob.m(), n = prob.n(), r = prob.r;

  return ObjectiveOracle(
      prob.dim(),
      [data, m, n, r](const Vector& x) {
        const auto w = w_view(x, m, r);
        const auto y = y_view(x, m, r, n);
        return 0.5 * (w * y - data->V).squaredNorm();
      },
      [data, m, n, r](const Vector& x) -> Vector {
        const auto w = w_view(x, m, r);
        const auto y = y_view(x, m, r, n);
        const Matrix resid = w * y - data->V;
        Vector g(x.size());
        MutMap(g.data(), m, r) = resid * y.transpose();
        MutMap(g.data() + static_cast<std::ptrdiff_t>(m) * r, r, n) =
            w.transpose() * resid;
        return g;
      },
      [data, m, n, r](const Vector& x, const Vector& v) -> Vector {
        const auto w = w_view(x, m, r);
        const auto y = y_view(x, m, r, n);
        const auto dw = w_view(v, m, r);
        const auto dy = y_view(v, m, r, n);
        const Matrix resid = w * y - data->V;
        const Matrix mixed = dw * y + w * dy;
        Vector out(x.size());
        MutMap(out.data(), m, r) = mixed * y.transpose() + resid * dy.transpose();
        MutMap(out.data() + static_cast<std::ptrdiff_t>(m) * r, r, n) =
            w.transpose() * mixed + dw.transpose() * resid;
        return out;
      });
}

SyntheticNmf gen_synthetic(int m, int n, int r, std::uint64_t seed) {
  if (m < 1 || n < 1 || r < 1)
    throw DimensionMismatch("gen_synthetic: dimensions must be positive");
  Rng rng(seed);
  SyntheticNmf out;
  out.w_true = half_normal(m, r, rng);
  out.y_true = half_normal(r, n, rng);
  out.zero_frac_w = zero_out(out.w_true, 0.6, rng);
  out.zero_frac_y = zero_out(out.y_true, 0.6, rng);

  const Matrix product = out.w_true * out.y_true;
  const double noise_sd = 0.05 * product.cwiseAbs().mean();
  Matrix v(m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) v(i, j) = product(i, j) + noise_sd * normal01(rng);

  out.v_scale = v.cwiseAbs().mean();
  v /= out.v_scale;
  out.prob = NmfProblem{std::move(v), r};
  return out;
}

std::pair<Matrix, Matrix> nmf_random_init(int m, int n, int r, std::uint64_t seed) {
  Rng rng(seed);
  Matrix w0 = half_normal(m, r, rng);
  Matrix y0 = half_normal(r, n, rng);
  w0 /= w0.cwiseAbs().mean();
  y0 /= y0.cwiseAbs().mean();
  return {std::move(w0), std::move(y0)};
}

SolverReport pgrad_nmf(const NmfProblem& prob, const Matrix& w0, const Matrix& y0,
                       double beta, double sigma, double tol, long max_outer_iters,
                       double max_wall_seconds) {
  ObjectiveOracle oracle = nmf_oracle(prob);
  PgradOptions opts;
  opts.beta = beta;
  opts.sigma = sigma;
  opts.tol = tol;
  opts.max_outer_iters = max_outer_iters;
  opts.max_wall_seconds = max_wall_seconds;
  return pgrad_solve(oracle, prob.bounds(), nmf_pack(prob, w0, y0), opts);
}

SaddleStart build_saddle(int m, int n, std::uint64_t seed, int r_target,
                         double rank1_tol) {
  SaddleStart out;
  const SyntheticNmf data = gen_synthetic(m, n, r_target, seed);
  out.prob = data.prob;

  NmfProblem rank1{data.prob.V, 1};
  const auto [w_init, y_init] = nmf_random_init(m, n, 1, seed + 0x9e3779b97f4a7c15ull);
  const SolverReport pre = pgrad_nmf(rank1, w_init, y_init, 0.5, 0.5, rank1_tol,
                                     200000, 600.0);
  if (!pre.converged())
    throw Rank1SolveFailed(
        "rank-1 pre-solve stopped with status " + std::string(to_string(pre.status)) +
        " at projnorm " + std::to_string(pre.projnorm));
  out.rank1_projnorm = pre.projnorm;

  const auto [w1, y1] = nmf_unpack(rank1, pre.x_final);
  out.w0 = (1.0 / 5.0) * w1 * Matrix::Ones(1, r_target);
  out.y0 = (1.0 / 2.0) * Matrix::Ones(r_target, 1) * y1;

  ObjectiveOracle oracle = nmf_oracle(out.prob);
  const Vector x0 = nmf_pack(out.prob, out.w0, out.y0);
  const Vector g0 = oracle.eval_grad(x0);
  out.saddle_projnorm = projected_gradient(x0, g0, out.prob.bounds()).norm();
  out.f0 = oracle.eval_f(x0);
  // Absolute floor guards the comparison when the rank-1 solve is exact.
  if (out.saddle_projnorm > 10.0 * std::max(out.rank1_projnorm, 1e-12))
    throw Rank1SolveFailed("replicated point is not stationary: projnorm " +
                           std::to_string(out.saddle_projnorm) + " exceeds 10x " +
                           std::to_string(out.rank1_projnorm));
  return out;
}

}  // namespace boxopt
