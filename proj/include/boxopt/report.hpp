//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_REPORT_HPP_
#define BOXOPT_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "boxopt/types.hpp"

namespace boxopt {

enum class SolveStatus {
  ConvergedEps1o,
  ConvergedEps2o,
  IterLimit,
  TimeLimit,
  LineSearchFailure,
};

enum class StepKind { GradProj, NewtonCgSol, NewtonCgNc, MeoNc, Terminate };

const char* to_string(SolveStatus s);
const char* to_string(StepKind k);

/// One accepted step. alpha is always an integer power of the backtracking
/// parameter; residual/projnorm are evaluated at the post-step iterate.
struct IterationRecord {
  long k = 0;
  double f = 0.0;
  StepKind step_type = StepKind::GradProj;
  double alpha = 0.0;
  double dir_norm = 0.0;
  double residual = 0.0;
  double projnorm = 0.0;
  double elapsed = 0.0;  // seconds since solve start
};

struct StepCounts {
  long grad_proj = 0;
  long newton_sol = 0;
  long newton_nc = 0;
  long meo_nc = 0;
  long total() const { return grad_proj + newton_sol + newton_nc + meo_nc; }
};

struct OracleCounts {
  std::uint64_t f = 0;
  std::uint64_t grad = 0;
  std::uint64_t hvp = 0;
};

struct SolverReport {
  SolveStatus status = SolveStatus::IterLimit;
  Vector x_final;
  double f_final = 0.0;
  double residual = 0.0;  // stationarity residual at eps_r = 1e-6
  double projnorm = 0.0;  // ||projected gradient|| at x_final
  long outer_iters = 0;
  StepCounts step_counts;
  OracleCounts oracle_counts;
  long meo_calls = 0;
  std::vector<IterationRecord> trace;
  std::vector<std::string> warnings;

  bool converged() const {
    return status == SolveStatus::ConvergedEps1o ||
           status == SolveStatus::ConvergedEps2o;
  }
};

}  // namespace boxopt

#endif  // BOXOPT_REPORT_HPP_
