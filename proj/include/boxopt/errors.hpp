//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_ERRORS_HPP_
#define BOXOPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace boxopt {

class ParameterOutOfRange : public std::invalid_argument {
 public:
  ParameterOutOfRange(std::string name, double value, const std::string& what)
      : std::invalid_argument(what), name_(std::move(name)), value_(value) {}
  const std::string& name() const { return name_; }
  double value() const { return value_; }

 private:
  std::string name_;
  double value_;
};

class InfeasiblePoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroGradient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IterCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rank1SolveFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CsvParseError : public IoError {
 public:
  CsvParseError(const std::string& what, long line)
      : IoError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace boxopt

#endif  // BOXOPT_ERRORS_HPP_
