// Copyright 2026 The eub Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <vector>

namespace eub {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Index = Eigen::Index;
using DimList = std::vector<Index>;

// All entropies are in bits (log base 2) throughout.

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double positivity = 1e-10;
inline constexpr double trace_one = 1e-10;
inline constexpr double unit_norm = 1e-10;
inline constexpr double basis_unitarity = 1e-9;
inline constexpr double povm_completeness = 1e-9;
inline constexpr double povm_positivity = 1e-10;
// Probability entries in [-probability_clip, 0) are rounding noise and get
// clipped to zero; anything more negative is an error.
inline constexpr double probability_clip = 1e-12;
// Mass of rho found in sigma's nullspace above this leaks the support
// condition of the relative entropy and yields the +infinity sentinel.
inline constexpr double support_leak = 1e-9;
// Conditional distributions are only formed where the conditioning marginal
// reaches this; smaller columns contribute zero to conditional sums.
inline constexpr double marginal_cutoff = 1e-15;
inline constexpr double audit_slack = 1e-9;
}  // namespace tol

// Eigenvalues below this fraction of the largest magnitude are treated as an
// exact nullspace by pseudo spectral functions (log / sqrt / inverse).
inline constexpr double kZeroCutoff = 1e-12;

// Sentinel for divergences with violated support conditions.  Produced only
// by explicit support checks, never by evaluating log(0) or by overflow, so
// comparisons against it are total.
inline constexpr double kInfiniteBits = std::numeric_limits<double>::infinity();

inline bool is_infinite(double x) { return std::isinf(x); }

inline Index dim_product(const DimList& dims) {
  Index d = 1;
  for (Index f : dims) d *= f;
  return d;
}

}  // namespace eub
