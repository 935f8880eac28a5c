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

#include <optional>
#include <string>

#include "eub/measurement.hpp"

namespace eub {

// Per-relation record: complementarity factor, measured conditional
// entropies, POVM residual, and the assembled lower bound on -H(A|B).
struct BoundReport {
  std::string relation;  // "mu", "c", "fsd", "fl", "ct", "fsdp", "pn"
  double q = 0.0;
  double h_xx = 0.0;  // H(X_A|X'_B), bits
  double h_zz = 0.0;  // H(Z_A|Z'_B), bits
  double residual = 0.0;  // H(A|ZB) correction; POVM relations only
  double bound = 0.0;     // q - h_xx - h_zz - residual
  std::optional<double> exact_neg_hab;            // -H(A|B) when the state is known
  std::optional<double> configurational_neg_hab;  // -H(A|B) of the dephased state
  bool swapped = false;  // whether the X<->Z orientation won
};

// q_MU = -log2 max_{x,z} c_xz.
double q_mu(const OverlapMatrix& c);

// Frank-Lieb factor -log2 max_{x,z} Tr(X^x Z^z); can be negative for coarse
// POVMs.
double q_fl(const Measurement& x, const Measurement& z);

// -log2 max_x || sum_z X^x Z^z X^x ||.
double q_ct(const Measurement& x, const Measurement& z);

// Marginal-dependent factor -sum_x P_X(x) log2 max_z c_xz.
double q_c(const OverlapMatrix& c, const RVec& p_x);

// Fully-state-dependent factor
//   -sum_{x,y} P_XY(x,y) log2( sum_z c_xz P_ZY(z|y) );
// terms whose Y marginal falls below tol::marginal_cutoff are dropped.
double q_fsd(const OverlapMatrix& c, const JointDistribution& p_xy,
             const JointDistribution& p_zy);

// POVM variant using h(x,z) in place of c_xz.
double q_fsdp(const RMat& h, const JointDistribution& p_xy,
              const JointDistribution& p_zy);

// Conservation-restricted factor -sum_n P_N(n) log2(max-overlap of sector n).
double q_pn(const RVec& sector_maxima, const RVec& p_n);

BoundReport assemble_bound(std::string relation, double q, double h_xx, double h_zz,
                           double residual = 0.0,
                           std::optional<double> exact_neg_hab = std::nullopt,
                           bool swapped = false);

// Theorem-5 witness H(A|B) - H(A|ZB): nonnegative for separable states.
double witness_povm(const DensityOperator& rho_ab, const Measurement& z);

// Local conserved quantity: orthogonal projector pairs labeled (n_A, n_B)
// with sum_n Pi_A^(nA) (x) Pi_B^(nB) = identity.
struct ConservedQuantity {
  struct Sector {
    int label_a = 0, label_b = 0;
    Mat proj_a, proj_b;
  };
  std::vector<Sector> sectors;

  static ConservedQuantity checked(std::vector<Sector> sectors, Index da, Index db);
};

// rho_bar = sum_n Pi^(n) rho Pi^(n).
DensityOperator project_conserved(const DensityOperator& rho_ab,
                                  const ConservedQuantity& n);

struct NumberDecomposition {
  double number_entropy = 0.0;     // H({p(n)})
  double configurational = 0.0;    // -H(A|B) of the projected state
  RVec sector_weights;
};

// Splits -H(A|B) of a pure state into the sector-weight entropy and the
// configurational part carried by the dephased state.
NumberDecomposition number_decomposition(const PureStateVector& psi,
                                         const ConservedQuantity& n);

}  // namespace eub
