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

#include "eub/bounds.hpp"
#include "eub/table.hpp"

namespace eub::hubbard {

// Two distinguishable particles on an open chain of L sites:
//   H = -J sum_p sum_i (a†_{p,i} a_{p,i+1} + h.c.) + U sum_i n_{1,i} n_{2,i}
struct LatticeModel {
  int sites = 2;
  double hopping = 1.0;      // J > 0
  double interaction = 0.0;  // U

  static LatticeModel checked(int sites, double hopping, double interaction);
};

// Bipartite Hamiltonian on d = L^2, particle 1 major.
Mat build_hamiltonian(const LatticeModel& m);

// Lowest eigenvector with the largest-modulus amplitude made real positive,
// and its energy.
std::pair<PureStateVector, double> ground_state(const LatticeModel& m);

// Single-particle evolution R(t) = exp(i t H(J=1, U=0)) on L sites; the
// bipartite measurement rotation is R (x) R.
Mat tunneling_unitary(int sites, double t);

// All factors and bounds at one (L, t) grid point, both particles measured
// in the same basis on each side.
struct RelationPoint {
  int sites = 0;
  double t_over_l = 0.0;
  double q_mu = 0.0, q_c = 0.0, q_fsd = 0.0;
  double h_xx = 0.0, h_zz = 0.0;
  double bound_mu = 0.0, bound_c = 0.0, bound_fsd = 0.0;
  double neg_hab_exact = 0.0;
};

RelationPoint evaluate_point(const PureStateVector& ground, double neg_hab, int sites,
                             double t);

// Sweep over lattice sizes and the tunneling-time grid t/L in (0, 1].
std::vector<RelationPoint> detection_sweep(const std::vector<int>& l_values,
                                           double u_over_j, int t_points, int threads);

// Figure data (columns documented in the CSV header row).
Table fig1_table(int l_max, double u_over_j);
Table fig2_table(int l_max, int t_points, int threads);
Table fig3_table(int sites, double t_over_l, int bins);
Table fig45_table(const std::vector<int>& l_values, double u_over_j, int t_points,
                  int threads);

}  // namespace eub::hubbard
