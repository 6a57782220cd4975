//
// Project BoxOpt - box-constrained nonconvex minimization.
// SPDX-License-Identifier: Apache-2.0
//

#include "boxopt/bounds.hpp"

#include <algorithm>

#include "boxopt/errors.hpp"

namespace boxopt {

BoundSpec::BoundSpec(int dim, std::vector<char> constrained, Vector upper)
    : dim_(dim), constrained_(std::move(constrained)), upper_(std::move(upper)) {
  for (int i = 0; i < dim_; ++i) {
    if (!this->constrained(i)) {
      upper_[i] = kInf;
    } else if (!(upper_[i] > 0.0)) {
      throw ParameterOutOfRange("upper", upper_[i],
                                "upper bound must be > 0 at index " + std::to_string(i));
    }
  }
}

BoundSpec BoundSpec::none(int dim) {
  return BoundSpec(dim, std::vector<char>(dim, 0), Vector::Constant(dim, kInf));
}

BoundSpec BoundSpec::nonnegative(int dim) {
  return BoundSpec(dim, std::vector<char>(dim, 1), Vector::Constant(dim, kInf));
}

BoundSpec BoundSpec::nonnegative_on(int dim, const std::vector<int>& constrained) {
  std::vector<char> mask(dim, 0);
  for (int i : constrained) {
    if (i < 0 || i >= dim) throw DimensionMismatch("constrained index out of range");
    mask[i] = 1;
  }
  return BoundSpec(dim, std::move(mask), Vector::Constant(dim, kInf));
}

BoundSpec BoundSpec::box(const Vector& upper) {
  const int dim = static_cast<int>(upper.size());
  return BoundSpec(dim, std::vector<char>(dim, 1), upper);
}

BoundSpec BoundSpec::general(int dim, const std::vector<int>& constrained,
                             const Vector& upper) {
  if (upper.size() != dim) throw DimensionMismatch("upper vector size != dim");
  std::vector<char> mask(dim, 0);
  for (int i : constrained) {
    if (i < 0 || i >= dim) throw DimensionMismatch("constrained index out of range");
    mask[i] = 1;
  }
  return BoundSpec(dim, std::move(mask), upper);
}

bool BoundSpec::any_constrained() const {
  return std::any_of(constrained_.begin(), constrained_.end(),
                     [](char c) { return c != 0; });
}

bool BoundSpec::any_upper() const {
  for (int i = 0; i < dim_; ++i)
    if (has_upper(i)) return true;
  return false;
}

std::vector<int> BoundSpec::constrained_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < dim_; ++i)
    if (constrained(i)) idx.push_back(i);
  return idx;
}

bool BoundSpec::is_feasible(const Vector& x) const {
  if (x.size() != dim_) return false;
  for (int i = 0; i < dim_; ++i) {
    if (!constrained(i)) continue;
    if (x[i] < 0.0 || x[i] > upper_[i]) return false;
  }
  return true;
}

}  // namespace boxopt
