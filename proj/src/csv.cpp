//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "boxopt/errors.hpp"

namespace boxopt {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_matrix_csv(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << a.rows() << "," << a.cols() << "\n";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ",";
      out << format_double(a(i, j));
    }
    out << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

namespace {

double parse_double(const std::string& tok, long line) {
  double v = 0.0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw CsvParseError("malformed number '" + tok + "'", line);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) toks.push_back(cur);
  return toks;
}

}  // namespace

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  long lineno = 1;
  if (!std::getline(in, line)) throw CsvParseError("missing header", lineno);
  const auto header = split(line);
  if (header.size() != 2) throw CsvParseError("header must be 'rows,cols'", lineno);
  const long rows = static_cast<long>(parse_double(header[0], lineno));
  const long cols = static_cast<long>(parse_double(header[1], lineno));
  if (rows < 1 || cols < 1) throw CsvParseError("non-positive dimensions", lineno);

  Matrix a(rows, cols);
  for (long i = 0; i < rows; ++i) {
    ++lineno;
    if (!std::getline(in, line))
      throw CsvParseError("unexpected end of file, expected " +
                              std::to_string(rows) + " rows",
                          lineno);
    const auto toks = split(line);
    if (static_cast<long>(toks.size()) != cols)
      throw CsvParseError("expected " + std::to_string(cols) + " values, found " +
                              std::to_string(toks.size()),
                          lineno);
    for (long j = 0; j < cols; ++j) a(i, j) = parse_double(toks[j], lineno);
  }
  return a;
}

void write_trace_csv(const std::string& path, const SolverReport& report) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "k,f,residual,projnorm,step_type,alpha,elapsed\n";
  for (const IterationRecord& rec : report.trace) {
    out << rec.k << "," << format_double(rec.f) << ","
        << format_double(rec.residual) << "," << format_double(rec.projnorm)
        << "," << to_string(rec.step_type) << "," << format_double(rec.alpha)
        << "," << format_double(rec.elapsed) << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace boxopt
