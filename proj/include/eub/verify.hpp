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

#include <cstdint>
#include <string>

#include "eub/bounds.hpp"

namespace eub {

// Haar-distributed unitary: QR of a complex Gaussian matrix with the
// R-diagonal phase fix.  Deterministic per seed.
Mat random_unitary(Index d, std::uint64_t seed);

// Random rank-r density operator via a complex Gaussian d x r factor.
DensityOperator random_density(Index d, Index rank, std::uint64_t seed);
DensityOperator random_density_bipartite(Index da, Index db, Index rank,
                                         std::uint64_t seed);

// Convex mixture of k random product pairs (manifestly separable).
DensityOperator random_separable(Index da, Index db, int k, std::uint64_t seed);

// Haar-random pure state on the given dims.
PureStateVector random_pure(DimList dims, std::uint64_t seed);

// k positive operators normalized through the inverse square root of their
// sum, so they resolve the identity up to rounding.
Measurement random_povm(Index d, int k, std::uint64_t seed);

enum class Relation {
  MaassenUffink,    // Eq. (14) style: no memory
  Berta,            // quantum memory, basis pair
  FrankLieb,        // POVM pair, trace overlap
  ColesTomamichel,  // POVM pair, operator-norm overlap with residual
  Fsd,              // fully state dependent, bases
  Tripartite,       // tripartite POVM relation via purification
  Fsdp,             // fully state dependent, POVMs, with residual
  Witness,          // POVM witness on separable states
  Conserved,        // conservation-restricted relation on dephased states
};

const char* relation_name(Relation r);
bool relation_from_name(const std::string& name, Relation* out);

struct AuditReport {
  Relation relation;
  Index dim_a = 0, dim_b = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double min_slack = 0.0;        // min over trials of LHS - RHS, bits
  std::uint64_t argmin_seed = 0; // per-trial derived seed attaining the min
  int violations = 0;            // trials with slack < -tol::audit_slack
};

// Randomized audit of one relation; per-trial seeds are seed + index so the
// result is schedule independent.
AuditReport audit_relation(Relation relation, Index da, Index db, int trials,
                           std::uint64_t seed, int threads = 1);

// |LHS - RHS| of the tripartite duality identity
// H(Z|C) = H(Z|B) - [H(A|B) - H(A|ZB)] on a purification of rho_AB.
double duality_residual(const DensityOperator& rho_ab, const Measurement& z);

// Operator-norm distance between rho_AB and its Petz reconstruction from the
// X- and Z-dephased states (X, Z mutually unbiased); ~0 exactly when the
// data-processing step of the memory relation is tight for this instance.
double petz_residual(const DensityOperator& rho_ab, const Measurement& x,
                     const Measurement& z);

struct TightnessScan {
  double min_gap = 0.0;
  std::uint64_t argmin_seed = 0;
};

// Statistical scan of the measured-relation gap
//   H(X_A|X'_B) + H(Z_A|Z'_B) - H(A|B) - log2(dA)
// over sampled MUB pairs on A and B-side measurements.  Each trial also
// evaluates Schmidt-matched candidates so the known tight families reach
// zero gap.
TightnessScan tightness_scan(const PureStateVector& psi, int trials,
                             std::uint64_t seed, int threads = 1);

// |bound - D(P_XY^rho || P_XY^dephased)| for the Schmidt-basis instance of
// the fully-state-dependent relation, with X/Y obtained from the Schmidt
// bases by the same single-side rotation u on A and B.
double schmidt_identity_residual(const PureStateVector& psi, const Mat& u);

}  // namespace eub
