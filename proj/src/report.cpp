//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/report.hpp"

namespace boxopt {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::ConvergedEps1o: return "ConvergedEps1o";
    case SolveStatus::ConvergedEps2o: return "ConvergedEps2o";
    case SolveStatus::IterLimit: return "IterLimit";
    case SolveStatus::TimeLimit: return "TimeLimit";
    case SolveStatus::LineSearchFailure: return "LineSearchFailure";
  }
  return "Unknown";
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::GradProj: return "GradProj";
    case StepKind::NewtonCgSol: return "NewtonCgSol";
    case StepKind::NewtonCgNc: return "NewtonCgNc";
    case StepKind::MeoNc: return "MeoNc";
    case StepKind::Terminate: return "Terminate";
  }
  return "Unknown";
}

}  // namespace boxopt
