//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BOXOPT_BOUNDS_HPP_
#define BOXOPT_BOUNDS_HPP_

#include <vector>

#include "boxopt/types.hpp"

namespace boxopt {

/// Feasible set {x | 0 <= x^i <= u^i for constrained i}. Unconstrained
/// indices are free on both sides; a constrained index without an explicit
/// upper bound has u^i = +inf. Upper bounds must be strictly positive.
class BoundSpec {
 public:
  /// No constraints at all.
  static BoundSpec none(int dim);
  /// x^i >= 0 for all i.
  static BoundSpec nonnegative(int dim);
  /// x^i >= 0 for the given indices only.
  static BoundSpec nonnegative_on(int dim, const std::vector<int>& constrained);
  /// 0 <= x^i <= upper[i] for all i (entries may be +inf).
  static BoundSpec box(const Vector& upper);
  /// General form; `upper` entries for unconstrained indices are ignored.
  static BoundSpec general(int dim, const std::vector<int>& constrained,
                           const Vector& upper);

  int dim() const { return dim_; }
  bool constrained(int i) const { return constrained_[i] != 0; }
  double upper(int i) const { return upper_[i]; }
  bool has_upper(int i) const { return constrained(i) && upper_[i] < kInf; }
  bool any_constrained() const;
  bool any_upper() const;
  std::vector<int> constrained_indices() const;

  bool is_feasible(const Vector& x) const;

 private:
  BoundSpec(int dim, std::vector<char> constrained, Vector upper);

  int dim_ = 0;
  std::vector<char> constrained_;
  Vector upper_;  // +inf where absent; meaningful only on constrained indices
};

}  // namespace boxopt

#endif  // BOXOPT_BOUNDS_HPP_
