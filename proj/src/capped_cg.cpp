//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/capped_cg.hpp"

#include <algorithm>
#include <cmath>

#include "boxopt/errors.hpp"

namespace boxopt {

MaskedHvp::MaskedHvp(ObjectiveOracle& oracle, const Vector& x, std::vector<int> mask)
    : oracle_(&oracle), x_(&x), mask_(std::move(mask)) {}

Vector MaskedHvp::scatter(const Vector& v_masked) const {
  Vector full = Vector::Zero(oracle_->dim());
  for (int i = 0; i < dim(); ++i) full[mask_[i]] = v_masked[i];
  return full;
}

Vector MaskedHvp::operator()(const Vector& v_masked) const {
  if (v_masked.size() != dim())
    throw DimensionMismatch("MaskedHvp: input size != mask size");
  const Vector full = oracle_->eval_hvp(*x_, scatter(v_masked));
  Vector out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = full[mask_[i]];
  return out;
}

namespace {

struct Derived {
  double kappa, tau, T;
};

Derived derive(double M, double eps) {
  Derived d;
  d.kappa = (M + 2.0 * eps) / eps;
  d.tau = std::sqrt(d.kappa) / (std::sqrt(d.kappa) + 1.0);
  d.T = 4.0 * std::pow(d.kappa, 4) / std::pow(1.0 - std::sqrt(d.tau), 2);
  return d;
}

long default_cap(long n, double kappa, double zeta_hat) {
  const double c =
      std::sqrt(kappa) * std::log(144.0 * std::sqrt(kappa) / (zeta_hat * zeta_hat));
  return static_cast<long>(std::min(static_cast<double>(n), std::ceil(c))) + 5;
}

CappedCgOutcome make_outcome(CgDirectionType type, Vector d, long iters, double M,
                             const Derived& dv, double zeta_hat, double rnorm) {
  CappedCgOutcome out;
  out.d_type = type;
  out.d = std::move(d);
  out.iters = iters;
  out.M_final = M;
  out.kappa = dv.kappa;
  out.zeta_hat = zeta_hat;
  out.tau = dv.tau;
  out.T = dv.T;
  out.residual_norm = rnorm;
  return out;
}

}  // namespace

CappedCgOutcome capped_cg(const LinOp& hvp, const Vector& g, double eps,
                          double zeta_hat, std::optional<double> M_hint,
                          long iter_cap) {
  const long n = g.size();
  if (g.norm() == 0.0) throw ZeroGradient("capped_cg: g must be nonzero");
  if (!(eps > 0.0 && eps < 1.0))
    throw ParameterOutOfRange("eps", eps, "capped_cg: eps must be in (0,1)");
  if (!(zeta_hat > 0.0 && zeta_hat < 1.0))
    throw ParameterOutOfRange("zeta_hat", zeta_hat,
                              "capped_cg: zeta_hat must be in (0,1)");

  double M = M_hint.value_or(0.0);
  Derived dv = derive(M, eps);
  auto cap = [&]() {
    return iter_cap > 0 ? iter_cap : default_cap(n, dv.kappa, zeta_hat);
  };

  Vector y = Vector::Zero(n);
  Vector r = g;
  Vector p = -g;
  Vector Hp = hvp(p);
  Vector Hy = Vector::Zero(n);
  const double r0_norm = g.norm();
  double rr = r.squaredNorm();

  double pHbp = p.dot(Hp) + 2.0 * eps * p.squaredNorm();
  if (pHbp < eps * p.squaredNorm())
    return make_outcome(CgDirectionType::NC, p, 0, M, dv, zeta_hat, r.norm());
  if (Hp.norm() > M * p.norm()) {
    M = Hp.norm() / p.norm();
    dv = derive(M, eps);
  }

  // All CG iterates and their H-products, for the weak-curvature search.
  std::vector<Vector> ys{y};
  std::vector<Vector> Hys{Hy};

  long j = 0;
  while (true) {
    if (pHbp < eps * p.squaredNorm())  // rounding guard before the division
      return make_outcome(CgDirectionType::NC, p, j, M, dv, zeta_hat, r.norm());
    const double alpha = rr / pHbp;

    y += alpha * p;
    Hy += alpha * Hp;
    r += alpha * (Hp + 2.0 * eps * p);
    const double rr_next = r.squaredNorm();
    const double beta = rr_next / rr;
    rr = rr_next;
    p = -r + beta * p;
    ++j;
    ys.push_back(y);
    Hys.push_back(Hy);

    Hp = hvp(p);
    const Vector Hr = hvp(r);
    pHbp = p.dot(Hp) + 2.0 * eps * p.squaredNorm();

    double ratio = 0.0;
    if (p.norm() > 0.0) ratio = std::max(ratio, Hp.norm() / p.norm());
    if (y.norm() > 0.0) ratio = std::max(ratio, Hy.norm() / y.norm());
    if (r.norm() > 0.0) ratio = std::max(ratio, Hr.norm() / r.norm());
    if (ratio > M) {
      M = ratio;
      dv = derive(M, eps);
    }

    const double yHby = y.dot(Hy) + 2.0 * eps * y.squaredNorm();
    if (yHby < eps * y.squaredNorm())
      return make_outcome(CgDirectionType::NC, y, j, M, dv, zeta_hat, r.norm());
    if (r.norm() <= zeta_hat * r0_norm)
      return make_outcome(CgDirectionType::SOL, y, j, M, dv, zeta_hat, r.norm());
    if (pHbp < eps * p.squaredNorm())
      return make_outcome(CgDirectionType::NC, p, j, M, dv, zeta_hat, r.norm());
    if (r.norm() > std::sqrt(dv.T) * std::pow(dv.tau, 0.5 * j) * r0_norm) {
      const Vector y_next = y + (rr / pHbp) * p;
      const Vector Hy_next = Hy + (rr / pHbp) * Hp;
      for (long i = 0; i + 1 < static_cast<long>(ys.size()); ++i) {
        const Vector dy = y_next - ys[i];
        const double curv = dy.dot(Hy_next - Hys[i]) + 2.0 * eps * dy.squaredNorm();
        if (curv < eps * dy.squaredNorm())
          return make_outcome(CgDirectionType::NC, dy, j, M, dv, zeta_hat, r.norm());
      }
      throw IterCapExceeded(
          "capped_cg: residual growth trap fired but no weak-curvature pair found");
    }
    if (j >= cap())
      throw IterCapExceeded("capped_cg: no exit within iteration cap " +
                            std::to_string(cap()));
  }
}

}  // namespace boxopt
