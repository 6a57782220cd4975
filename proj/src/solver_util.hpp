//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_SRC_SOLVER_UTIL_HPP_
#define BOXOPT_SRC_SOLVER_UTIL_HPP_

#include <chrono>
#include <cmath>

#include "boxopt/bounds.hpp"
#include "boxopt/geometry.hpp"
#include "boxopt/oracle.hpp"
#include "boxopt/report.hpp"

namespace boxopt::detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Tracks oracle counter deltas for one solve.
class CounterScope {
 public:
  explicit CounterScope(const ObjectiveOracle& oracle)
      : oracle_(&oracle),
        f0_(oracle.f_evals()),
        g0_(oracle.grad_evals()),
        h0_(oracle.hvp_evals()) {}
  OracleCounts delta() const {
    return {oracle_->f_evals() - f0_, oracle_->grad_evals() - g0_,
            oracle_->hvp_evals() - h0_};
  }

 private:
  const ObjectiveOracle* oracle_;
  std::uint64_t f0_, g0_, h0_;
};

inline constexpr double kReportEpsR = 1e-6;
inline constexpr int kBacktrackCap = 100;

inline void finalize_report(SolverReport& rep, const Vector& x, double f,
                            const Vector& g, const BoundSpec& bounds,
                            const CounterScope& counters) {
  rep.x_final = x;
  rep.f_final = f;
  rep.residual = residual(x, g, bounds, kReportEpsR);
  rep.projnorm = projected_gradient(x, g, bounds).norm();
  rep.oracle_counts = counters.delta();
}

inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const Vector& v) { return v.allFinite(); }

}  // namespace boxopt::detail

#endif  // BOXOPT_SRC_SOLVER_UTIL_HPP_
