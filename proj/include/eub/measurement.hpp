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

#include "eub/entropy.hpp"
#include "eub/qmath.hpp"

namespace eub {

// POVM square roots clip rank-deficiency noise at this relative level.
inline constexpr double kPovmSqrtCutoff = 1e-9;

// Either a measurement in an orthonormal basis (columns of a unitary) or a
// validated POVM.  Outcome labels are integer tuples so model code can label
// lattice sites or Fock occupations.
struct Measurement {
  enum class Kind { Basis, Povm };

  Kind kind = Kind::Basis;
  Mat unitary;                // Basis: columns are the basis vectors
  std::vector<Mat> elements;  // Povm: positive operators summing to identity
  std::vector<std::vector<int>> labels;

  Index dim() const;
  Index outcomes() const;
  // k-th POVM element; for a basis, the rank-1 projector onto column k.
  Mat element(Index k) const;
  Mat sqrt_element(Index k) const;

  // Validating constructors; throw std::invalid_argument.
  static Measurement basis(Mat u, std::vector<std::vector<int>> labels = {});
  static Measurement povm(std::vector<Mat> elements,
                          std::vector<std::vector<int>> labels = {});
};

// Computational basis and the d-dimensional Fourier basis F_jk = w^{jk}/sqrt(d).
Measurement computational_basis(Index d);
Mat fourier_matrix(Index d);

// c(x, z) = |<Z^z|X^x>|^2; doubly stochastic for basis pairs.
struct OverlapMatrix {
  RMat c;  // rows: X outcomes, cols: Z outcomes
};
OverlapMatrix overlap_matrix(const Measurement& x, const Measurement& z);

// h(x, z) = || sqrt(Z^z) X^x sqrt(Z^z) || for POVM pairs; reduces to the
// overlap matrix on rank-1 projective inputs.
RMat povm_overlap_h(const Measurement& x, const Measurement& z);

// P(x, y) = Tr[(X^x (x) Y^y) rho] over the labeled outcome grid.
JointDistribution joint_distribution(const DensityOperator& rho_ab,
                                     const Measurement& ma, const Measurement& mb);

// Pure-state fast path; avoids forming the density matrix for basis pairs.
JointDistribution joint_distribution(const PureStateVector& psi,
                                     const Measurement& ma, const Measurement& mb);

// State after measuring Z on subsystem `site` without reading the outcome.
// Basis: same dims, dephased in the measured basis.  Povm: an outcome
// register of size K is prepended, state becomes sum_x |x><x| (x)
// sqrt(Z^x) rho sqrt(Z^x).
DensityOperator post_measure(const DensityOperator& rho, const Measurement& z,
                             int site = 0);

// Isometry extension V|psi> = sum_x |x>|x> sqrt(Z^x)|psi> of a POVM on A of
// a bipartite state; result dims {K, K, dA, dB}.
DensityOperator isometry_extend(const DensityOperator& rho_ab, const Measurement& z);

// H(A|ZB) of the post-measurement state: average conditional entropy left
// after a POVM Z on A (zero for rank-1 projective Z).
double residual_conditional(const DensityOperator& rho_ab, const Measurement& z);

struct QuantumClassicalCheck {
  bool quantum_classical = false;
  double discord_gap = 0.0;     // H(A|X) - H(A|B) in the rho_B eigenbasis
  double max_deviation = 0.0;   // max |rho - dephased rho|
  bool degenerate_spectrum = false;
};

// Tests whether measuring B in the eigenbasis of rho_B leaves the state
// unchanged (the zero-discord criterion).  A degenerate rho_B spectrum is
// flagged; one representative eigenbasis is tested.
QuantumClassicalCheck is_quantum_classical(const DensityOperator& rho_ab, double tol);

}  // namespace eub
