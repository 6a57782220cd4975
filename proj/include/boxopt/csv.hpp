//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_CSV_HPP_
#define BOXOPT_CSV_HPP_

#include <string>

#include "boxopt/report.hpp"
#include "boxopt/types.hpp"

namespace boxopt {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// Matrix file format: a "rows,cols" header line followed by one CSV line
/// per row. Values use shortest round-trip formatting.
void write_matrix_csv(const std::string& path, const Matrix& a);
Matrix read_matrix_csv(const std::string& path);

/// Iteration trace with columns k,f,residual,projnorm,step_type,alpha,elapsed.
void write_trace_csv(const std::string& path, const SolverReport& report);

}  // namespace boxopt

#endif  // BOXOPT_CSV_HPP_
