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

#include "eub/hubbard.hpp"

#include <stdexcept>

#include "eub/parallel.hpp"

namespace eub::hubbard {

namespace {

// Single-particle hopping Hamiltonian at J = 1 on an open chain.
Eigen::MatrixXd hopping_matrix(int sites) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(sites, sites);
  for (int i = 0; i + 1 < sites; ++i) {
    h(i, i + 1) = -1.0;
    h(i + 1, i) = -1.0;
  }
  return h;
}

Eigen::MatrixXd real_hamiltonian(const LatticeModel& m) {
  const int l = m.sites;
  const Eigen::MatrixXd single = m.hopping * hopping_matrix(l);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(l * l, l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      for (int k = 0; k < l; ++k) {
        if (single(i, k) != 0.0) h(i * l + j, k * l + j) += single(i, k);  // particle 1
        if (single(j, k) != 0.0) h(i * l + j, i * l + k) += single(j, k);  // particle 2
      }
    }
  for (int i = 0; i < l; ++i) h(i * l + i, i * l + i) += m.interaction;
  return h;
}

}  // namespace

LatticeModel LatticeModel::checked(int sites, double hopping, double interaction) {
  if (sites < 2) throw std::invalid_argument("LatticeModel: need at least two sites");
  if (!(hopping > 0.0))
    throw std::invalid_argument("LatticeModel: hopping must be positive");
  return LatticeModel{sites, hopping, interaction};
}

Mat build_hamiltonian(const LatticeModel& m) {
  return real_hamiltonian(m).cast<Complex>();
}

std::pair<PureStateVector, double> ground_state(const LatticeModel& m) {
  // the Hamiltonian is real symmetric; solve in real arithmetic
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(real_hamiltonian(m));
  Eigen::VectorXd v = es.eigenvectors().col(0);
  Index peak = 0;
  v.cwiseAbs().maxCoeff(&peak);
  if (v(peak) < 0.0) v = -v;
  v /= v.norm();
  const Index l = m.sites;
  return {PureStateVector{v.cast<Complex>(), DimList{l, l}}, es.eigenvalues()(0)};
}

Mat tunneling_unitary(int sites, double t) {
  return spectral_function(hopping_matrix(sites).cast<Complex>(),
                           [t](double x) { return std::exp(Complex(0.0, t * x)); });
}

RelationPoint evaluate_point(const PureStateVector& ground, double neg_hab, int sites,
                             double t) {
  const Mat r = tunneling_unitary(sites, t);
  const Measurement x = computational_basis(sites);
  const Measurement z = Measurement::basis(r.adjoint());  // basis vectors R†|z>

  const JointDistribution p_xx = joint_distribution(ground, x, x);
  const JointDistribution p_zz = joint_distribution(ground, z, z);
  const JointDistribution p_zx = joint_distribution(ground, z, x);
  const JointDistribution p_xz = joint_distribution(ground, x, z);

  RelationPoint out;
  out.sites = sites;
  out.t_over_l = t / static_cast<double>(sites);
  out.h_xx = conditional_classical(p_xx);
  out.h_zz = conditional_classical(p_zz);
  out.neg_hab_exact = neg_hab;

  const OverlapMatrix c = overlap_matrix(x, z);
  OverlapMatrix c_swapped;
  c_swapped.c = c.c.transpose();

  out.q_mu = q_mu(c);
  out.q_c = std::max(q_c(c, p_xx.marginal_x()), q_c(c_swapped, p_zz.marginal_x()));
  out.q_fsd = std::max(q_fsd(c, p_xx, p_zx), q_fsd(c_swapped, p_zz, p_xz));

  const double measured = out.h_xx + out.h_zz;
  out.bound_mu = out.q_mu - measured;
  out.bound_c = out.q_c - measured;
  out.bound_fsd = out.q_fsd - measured;
  return out;
}

std::vector<RelationPoint> detection_sweep(const std::vector<int>& l_values,
                                           double u_over_j, int t_points, int threads) {
  if (t_points < 1) throw std::invalid_argument("detection_sweep: empty t grid");
  std::vector<RelationPoint> out(l_values.size() * static_cast<std::size_t>(t_points));
  for (std::size_t li = 0; li < l_values.size(); ++li) {
    const LatticeModel m = LatticeModel::checked(l_values[li], 1.0, u_over_j);
    const auto [ground, energy] = ground_state(m);
    (void)energy;
    const auto sd = schmidt(ground);
    const double neg_hab = shannon(sd.coefficients.cwiseAbs2());
    parallel_for(static_cast<std::size_t>(t_points), threads, [&](std::size_t ti) {
      // t/L grid over (0, 1]
      const double t_over_l =
          static_cast<double>(ti + 1) / static_cast<double>(t_points);
      out[li * static_cast<std::size_t>(t_points) + ti] =
          evaluate_point(ground, neg_hab, m.sites, t_over_l * m.sites);
    });
  }
  return out;
}

Table fig1_table(int l_max, double u_over_j) {
  Table t;
  t.columns = {"L", "neg_HAB", "log2_L_reference"};
  for (int l = 2; l <= l_max; ++l) {
    const auto [ground, energy] = ground_state(LatticeModel::checked(l, 1.0, u_over_j));
    (void)energy;
    const auto sd = schmidt(ground);
    t.rows.push_back({static_cast<double>(l), shannon(sd.coefficients.cwiseAbs2()),
                      std::log2(static_cast<double>(l))});
  }
  return t;
}

Table fig2_table(int l_max, int t_points, int threads) {
  Table t;
  t.columns = {"L", "t_over_L", "q_mu_over_log2_L"};
  std::vector<std::pair<int, int>> grid;
  for (int l = 2; l <= l_max; ++l)
    for (int ti = 0; ti < t_points; ++ti) grid.emplace_back(l, ti);
  std::vector<std::vector<double>> rows(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const auto [l, ti] = grid[i];
    const double t_over_l = static_cast<double>(ti + 1) / static_cast<double>(t_points);
    const Mat r = tunneling_unitary(l, t_over_l * l);
    const double cmax = r.cwiseAbs2().maxCoeff();
    rows[i] = {static_cast<double>(l), t_over_l,
               -std::log2(cmax) / std::log2(static_cast<double>(l))};
  });
  t.rows = std::move(rows);
  return t;
}

Table fig3_table(int sites, double t_over_l, int bins) {
  if (bins < 1) throw std::invalid_argument("fig3_table: need at least one bin");
  const Mat r = tunneling_unitary(sites, t_over_l * sites);
  const RMat c = r.cwiseAbs2();
  const double top = c.maxCoeff();
  Table t;
  t.columns = {"bin_left", "bin_right", "count"};
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (Index i = 0; i < c.rows(); ++i)
    for (Index j = 0; j < c.cols(); ++j) {
      const int b = std::min(bins - 1, static_cast<int>(c(i, j) / top * bins));
      counts[static_cast<std::size_t>(b)] += 1.0;
    }
  for (int b = 0; b < bins; ++b)
    t.rows.push_back(
        {top * b / bins, top * (b + 1) / bins, counts[static_cast<std::size_t>(b)]});
  return t;
}

Table fig45_table(const std::vector<int>& l_values, double u_over_j, int t_points,
                  int threads) {
  Table t;
  t.columns = {"L",    "t_over_L", "q_mu",     "q_c",     "q_fsd",     "H_XX",
               "H_ZZ", "bound_mu", "bound_c",  "bound_fsd", "neg_HAB_exact"};
  for (const RelationPoint& p : detection_sweep(l_values, u_over_j, t_points, threads))
    t.rows.push_back({static_cast<double>(p.sites), p.t_over_l, p.q_mu, p.q_c, p.q_fsd,
                      p.h_xx, p.h_zz, p.bound_mu, p.bound_c, p.bound_fsd,
                      p.neg_hab_exact});
  return t;
}

}  // namespace eub::hubbard
