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

#include <functional>
#include <span>

#include "eub/common.hpp"

namespace eub {

// Index convention used everywhere: the first subsystem is the slow (major)
// index, so for dims {dA, dB} the flat index is iA * dB + iB.

// Hermitian, positive, trace-one matrix tagged with its subsystem split.
struct DensityOperator {
  Mat mat;
  DimList dims;

  Index dim() const { return mat.rows(); }
  // Validates Hermiticity, positivity and unit trace; throws std::invalid_argument.
  static DensityOperator checked(Mat m, DimList dims);
};

struct PureStateVector {
  Vec amps;
  DimList dims;

  Index dim() const { return amps.size(); }
  static PureStateVector checked(Vec a, DimList dims);
  DensityOperator density() const;
};

struct SchmidtDecomposition {
  RVec coefficients;  // descending, nonnegative
  Mat left_vectors;   // orthonormal columns on A
  Mat right_vectors;  // orthonormal columns on B; psi = sum_k c_k l_k (x) r_k
};

Mat tensor_product(const Mat& a, const Mat& b);
Vec tensor_product_vec(const Vec& a, const Vec& b);

// Keeps the listed subsystems (ascending, order-preserving) and traces out
// the rest.  Throws on invalid or duplicate indices.
DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep);
DensityOperator partial_trace(const DensityOperator& rho, int keep);

// Eigenvalues of (h + h^dagger)/2, ascending.
RVec hermitian_eigenvalues(const Mat& h);

// f applied to the eigenvalues of the symmetrized h.  Eigenvalues below
// rel_cutoff * max|eigenvalue| are treated as an exact nullspace: they map
// to 0 without calling f (pseudo-function on the support).
Mat spectral_function(const Mat& h, const std::function<Complex(double)>& f,
                      double rel_cutoff = kZeroCutoff);

// Pseudo square root / inverse square root on the support.  Throw
// std::domain_error on eigenvalues negative beyond the cutoff.
Mat matrix_sqrt(const Mat& h, double rel_cutoff = kZeroCutoff);
Mat matrix_inv_sqrt(const Mat& h, double rel_cutoff = kZeroCutoff);

// Schmidt decomposition of a bipartite pure state (exactly two factors).
SchmidtDecomposition schmidt(const PureStateVector& psi);

// Purification on H (x) H' with H' of dimension rank(rho); tracing out the
// primed factor recovers rho.
PureStateVector purify(const DensityOperator& rho, double rel_cutoff = kZeroCutoff);

}  // namespace eub
