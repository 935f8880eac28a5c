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

#include <array>
#include <cstdint>

#include "eub/bounds.hpp"
#include "eub/table.hpp"

namespace eub::spin1 {

// Fock states |N1, N0, N-1> of N spin-1 particles in the three Zeeman modes,
// ordered lexicographically descending in (N1, N0).
struct FockBasis {
  int total = 0;
  std::vector<std::array<int, 3>> states;

  static FockBasis make(int n);
  Index size() const { return static_cast<Index>(states.size()); }
  Index index(const std::array<int, 3>& occ) const;
};

// sum_{jk} C_jk a_j^dag a_k on the fixed-N space; number conserving by
// construction.  Mode order (+1, 0, -1) matches the Fock labels.
Mat ladder_quadratic(const FockBasis& basis, const Eigen::Matrix3cd& c);

// Fock representation R^(n) = exp(sum_jk log(u)_jk a_j^dag a_k) of a
// single-particle unitary on the n-particle sector (principal branch).
// branch_flagged reports an eigenvalue at the branch cut (u eigenvalue -1).
Mat represent(const Eigen::Matrix3cd& u, int n, bool* branch_flagged = nullptr);

// Single-particle matrices.
Eigen::Matrix3cd fourier3();  // (i/sqrt(3)) exp(2 pi i jk / 3)
Eigen::Matrix3cd phase_rotation(double phi1, double phi0, double phim1);
Eigen::Matrix3cd spin_y_matrix();
Eigen::Matrix3cd squeeze_rotation();      // R_sq
Eigen::Matrix3cd antisqueeze_rotation();  // R_antisq

// Per-sector cache of one rotation's Fock representations.  Diagonal phase
// rotations are stored as phase vectors, everything else as dense blocks.
class SpinRotation {
 public:
  static SpinRotation identity(int max_sector);
  static SpinRotation diagonal_phases(const Eigen::Vector3d& phi, int max_sector);
  SpinRotation(const Eigen::Matrix3cd& u, int max_sector, int threads = 1);

  int max_sector() const { return max_sector_; }
  bool branch_flagged() const { return branch_flagged_; }
  const Eigen::Matrix3cd& single_particle() const { return u_; }

  // dense representation of sector n (materialized on demand for the
  // identity / diagonal kinds)
  Mat sector(int n) const;

  // block' = R^(n) block   and   block' = block R^(n)^T
  Mat apply_left(const Mat& block, int n) const;
  Mat apply_right(const Mat& block, int n) const;

 private:
  enum class Kind { Identity, Diagonal, Dense };
  SpinRotation() = default;

  Kind kind_ = Kind::Identity;
  Eigen::Matrix3cd u_ = Eigen::Matrix3cd::Identity();
  int max_sector_ = 0;
  bool branch_flagged_ = false;
  std::vector<Vec> diag_;   // Diagonal kind
  std::vector<Mat> dense_;  // Dense kind
};

// Spin-mixing Hamiltonian
//   H = g (a1† a-1† a0 a0 + a0† a0† a1 a-1 + (N0 - 1/2)(N1 + N-1))
//       + q (N1 + N-1).
Mat spin_mixing_hamiltonian(const FockBasis& basis, double g, double q);

// S(phi) = (i/sqrt(2)) (e^{-i phi} a0†(a1 - a-1) + h.c.).
Mat spin_operator(const FockBasis& basis, double phi);

// Exact evolution exp(-iHt) via one spectral decomposition.
class Evolution {
 public:
  explicit Evolution(const Mat& h);
  Vec at(const Vec& psi0, double t) const;

 private:
  Eigen::SelfAdjointEigenSolver<Mat> es_;
};

Vec polar_state(const FockBasis& basis);  // |0, N, 0>

// Truncated two-mode-squeezed amplitudes (1/cosh r) (-i tanh r)^n on
// |n, N-2n, n>, renormalized.
Vec squeezed_reference(const FockBasis& basis, double r);

// 50:50 beamsplitter splitting into A and B; block n holds the amplitudes
// with n particles in A (rows: FockBasis(n), cols: FockBasis(N-n)).
struct SectorBlockedState {
  int total = 0;
  std::vector<Mat> blocks;

  RVec sector_weights() const;
  double squared_norm() const;
};
SectorBlockedState beamsplit(const Vec& psi, const FockBasis& basis);

// Joint outcome table of local Fock measurements after local rotations,
// kept in the same sector-blocked layout.
struct SectorDistribution {
  int total = 0;
  std::vector<RMat> blocks;

  double sum() const;
};
SectorDistribution bipartite_distribution(const SectorBlockedState& state,
                                          const SpinRotation& ua,
                                          const SpinRotation& ub);

// H(X_A | Y_B) of a sector-blocked joint distribution.
double conditional_a_given_b(const SectorDistribution& p);

// Overlap tables c^(n)(x, z) = |R^(n)_{z x}|^2 of the relative rotation
// between the two measurements (sector maxima clamped to 1).
std::vector<RMat> overlap_blocks(const SpinRotation& relative);

// Complementarity factors on the split system.  q_mu is exactly zero for
// any spin rotation pair (the empty sector contributes overlap 1).
double q_mu_split(const std::vector<RMat>& c_blocks);
double q_pn_split(const std::vector<RMat>& c_blocks, const RVec& p_n);
double q_c_split(const std::vector<RMat>& c_blocks, const SectorDistribution& p_xy,
                 bool swap_xz);
double q_fsd_split(const std::vector<RMat>& c_blocks, const SectorDistribution& p_xy,
                   const SectorDistribution& p_zy, bool swap_xz);

// Number / configurational split of a pure blocked state.
struct SplitDecomposition {
  double number_entropy = 0.0;
  double configurational = 0.0;  // -H(A|B) of the sector-dephased state
  RVec weights;
};
SplitDecomposition decompose(const SectorBlockedState& state);

// Dense embedding into H_A (x) H_B (all local occupations up to N); used by
// cross-checks against the generic machinery.
PureStateVector embed_full(const SectorBlockedState& state);

// Everything the figures need at one state: measurement X = bare basis
// rotated by diagonal phases, Z = its single-particle Fourier transform.
struct Spin1Point {
  double r_or_q = 0.0;
  double number_entropy = 0.0;
  double configurational = 0.0;
  double h_xx = 0.0, h_zz = 0.0;
  double q_mu = 0.0, q_pn = 0.0, q_c = 0.0, q_fsd = 0.0;
  double bound_mu = 0.0, bound_pn = 0.0, bound_c = 0.0, bound_fsd = 0.0;
};
Spin1Point evaluate_point(const SectorBlockedState& state, const SpinRotation& fourier,
                          const Eigen::Vector3d& phases);

enum class Objective { EntropySum, FsdBound };

struct OptimizeResult {
  Eigen::Vector3d phases = Eigen::Vector3d::Zero();  // sums to zero
  double objective = 0.0;
  Spin1Point point;
  bool converged = false;
  int restarts = 0;
};

// Derivative-free minimization over the two free phases (entropy-sum
// minimizes H(X|X') + H(Z|Z'), fsd-bound maximizes the assembled bound);
// deterministic per seed, best of `restarts` runs.
OptimizeResult optimize_phases(const SectorBlockedState& state,
                               const SpinRotation& fourier, Objective objective,
                               int restarts, std::uint64_t seed);

// Spin-mixing evolution of the polar state at squeezing r = N g t followed
// by the beamsplitter, evaluated on an r grid at fixed phases.
std::vector<Spin1Point> squeezed_sweep(int n, const std::vector<double>& r_values,
                                       const Eigen::Vector3d& phases, int threads);

// Ground states in the |k, N-2k, k> subspace for g < 0 over a q/q_c grid
// (q_c = 2N|g|), bare basis + Fourier measurements.
std::vector<Spin1Point> ground_sweep(int n, double g,
                                     const std::vector<double>& q_over_qc,
                                     int threads);

// Ground state of the spin-mixing Hamiltonian restricted to the
// S_z = 0 pair subspace spanned by |k, N-2k, k>.
Vec pair_subspace_ground_state(const FockBasis& basis, double g, double q);

// min over random SU(3) samples of max_jk |u_jk|^2 (the Fourier matrix
// attains 1/3); reported as evidence, never asserted.
double fourier_optimality_probe(int samples, std::uint64_t seed);

// Figure data.
Table fig67_table(int n_small, int n_large, int r_points, double r_max,
                  const Eigen::Vector3d& phases, int threads);
Table fig8_table(int n, double g, int q_points, double q_range, int threads);

}  // namespace eub::spin1
