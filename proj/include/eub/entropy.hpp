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

#include <span>

#include "eub/qmath.hpp"

namespace eub {

// Nonnegative table P(x, y) over a labeled outcome grid, summing to one.
struct JointDistribution {
  RMat table;  // rows: X outcomes (A side), cols: Y outcomes (B side)
  std::vector<std::vector<int>> labels_x, labels_y;

  RVec marginal_x() const { return table.rowwise().sum(); }
  RVec marginal_y() const { return table.colwise().sum().transpose(); }

  // Validates nonnegativity (clipping rounding noise) and normalization.
  static JointDistribution checked(RMat t, std::vector<std::vector<int>> lx = {},
                                   std::vector<std::vector<int>> ly = {});
};

// Clips entries in [-probability_clip, 0) to zero and renormalizes; throws
// on larger negatives.
RVec clean_probabilities(RVec p);

// Shannon entropy in bits (0 log 0 = 0).
double shannon(const RVec& p);

// Von Neumann entropy H(rho) in bits, the Shannon entropy of the clipped
// eigenvalues.
double von_neumann(const DensityOperator& rho);

// H(A|B) = H(rho_AB) - H(rho_B) for a bipartite split.
double conditional_quantum(const DensityOperator& rho_ab);

// H(target | cond) = H(rho_{target+cond}) - H(rho_cond) for arbitrary
// subsystem subsets (each ascending).
double conditional_quantum_general(const DensityOperator& rho,
                                   std::span<const int> target,
                                   std::span<const int> cond);

// I(A:B) = H(rho_A) + H(rho_B) - H(rho_AB).
double mutual_information(const DensityOperator& rho_ab);

// D(rho || sigma) in bits; kInfiniteBits when supp(rho) is not contained in
// supp(sigma) (rho mass above tol::support_leak in sigma's nullspace).
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

// H(X|Y) = H(XY) - H(Y); columns with marginal below tol::marginal_cutoff
// contribute zero.
double conditional_classical(const JointDistribution& p);

// Classical relative entropy; kInfiniteBits on support violation.
double relative_classical(const RVec& p, const RVec& q);

}  // namespace eub
