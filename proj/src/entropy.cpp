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

#include "eub/entropy.hpp"

#include <algorithm>
#include <stdexcept>

#include "eub/kernels.hpp"

namespace eub {

namespace {

std::vector<std::vector<int>> default_labels(Index n) {
  std::vector<std::vector<int>> out(n);
  for (Index i = 0; i < n; ++i) out[i] = {static_cast<int>(i)};
  return out;
}

}  // namespace

JointDistribution JointDistribution::checked(RMat t, std::vector<std::vector<int>> lx,
                                             std::vector<std::vector<int>> ly) {
  for (Index i = 0; i < t.rows(); ++i)
    for (Index j = 0; j < t.cols(); ++j) {
      if (t(i, j) < -tol::probability_clip)
        throw std::invalid_argument("JointDistribution: negative entry");
      if (t(i, j) < 0.0) t(i, j) = 0.0;
    }
  const double total = t.sum();
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("JointDistribution: table does not sum to 1");
  t /= total;
  if (lx.empty()) lx = default_labels(t.rows());
  if (ly.empty()) ly = default_labels(t.cols());
  if (static_cast<Index>(lx.size()) != t.rows() ||
      static_cast<Index>(ly.size()) != t.cols())
    throw std::invalid_argument("JointDistribution: label count mismatch");
  return JointDistribution{std::move(t), std::move(lx), std::move(ly)};
}

RVec clean_probabilities(RVec p) {
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) < -tol::probability_clip)
      throw std::invalid_argument("probability vector: negative entry");
    if (p(i) < 0.0) p(i) = 0.0;
  }
  const double total = p.sum();
  if (total <= 0.0) throw std::invalid_argument("probability vector: zero total mass");
  return p / total;
}

double shannon(const RVec& p) {
  const RVec q = clean_probabilities(p);
  return kernels::entropy_bits(q.data(), static_cast<std::size_t>(q.size()));
}

double von_neumann(const DensityOperator& rho) {
  RVec ev = hermitian_eigenvalues(rho.mat);
  for (Index i = 0; i < ev.size(); ++i)
    if (ev(i) < 0.0) ev(i) = 0.0;
  return kernels::entropy_bits(ev.data(), static_cast<std::size_t>(ev.size()));
}

double conditional_quantum(const DensityOperator& rho_ab) {
  if (rho_ab.dims.size() != 2)
    throw std::invalid_argument("conditional_quantum: state is not bipartite");
  return von_neumann(rho_ab) - von_neumann(partial_trace(rho_ab, 1));
}

double conditional_quantum_general(const DensityOperator& rho,
                                   std::span<const int> target,
                                   std::span<const int> cond) {
  std::vector<int> both(target.begin(), target.end());
  both.insert(both.end(), cond.begin(), cond.end());
  std::sort(both.begin(), both.end());
  const double h_joint = von_neumann(partial_trace(rho, both));
  if (cond.empty()) return h_joint;
  return h_joint - von_neumann(partial_trace(rho, cond));
}

double mutual_information(const DensityOperator& rho_ab) {
  if (rho_ab.dims.size() != 2)
    throw std::invalid_argument("mutual_information: state is not bipartite");
  return von_neumann(partial_trace(rho_ab, 0)) + von_neumann(partial_trace(rho_ab, 1)) -
         von_neumann(rho_ab);
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  // Tr[rho log rho]
  RVec ev = hermitian_eigenvalues(rho.mat);
  for (Index i = 0; i < ev.size(); ++i)
    if (ev(i) < 0.0) ev(i) = 0.0;
  const double h_rho = kernels::entropy_bits(ev.data(), static_cast<std::size_t>(ev.size()));

  // Tr[rho log sigma] on sigma's support; leakage into the nullspace yields
  // the infinite sentinel.
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (sigma.mat + sigma.mat.adjoint()));
  const RVec& sv = es.eigenvalues();
  const double cut = kZeroCutoff * sv.cwiseAbs().maxCoeff();
  double cross = 0.0;
  double leak = 0.0;
  for (Index i = 0; i < sv.size(); ++i) {
    const double weight =
        (es.eigenvectors().col(i).adjoint() * rho.mat * es.eigenvectors().col(i))(0).real();
    if (sv(i) <= cut) {
      leak += weight;
    } else {
      cross += weight * std::log2(sv(i));
    }
  }
  if (leak > tol::support_leak) return kInfiniteBits;
  return -h_rho - cross;
}

double conditional_classical(const JointDistribution& p) {
  const RVec my = p.marginal_y();
  double h_joint = 0.0;
  double h_y = 0.0;
  for (Index j = 0; j < my.size(); ++j) {
    if (my(j) < tol::marginal_cutoff) continue;
    h_joint += kernels::entropy_bits(p.table.col(j).data(),
                                     static_cast<std::size_t>(p.table.rows()));
    h_y -= my(j) * std::log2(my(j));
  }
  return h_joint - h_y;
}

double relative_classical(const RVec& p, const RVec& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("relative_classical: length mismatch");
  const RVec pc = clean_probabilities(p);
  const RVec qc = clean_probabilities(q);
  double out = 0.0;
  for (Index i = 0; i < pc.size(); ++i) {
    if (pc(i) <= 1e-12) continue;  // vanishing mass contributes nothing
    if (qc(i) < tol::marginal_cutoff) return kInfiniteBits;
    out += pc(i) * (std::log2(pc(i)) - std::log2(qc(i)));
  }
  return out;
}

}  // namespace eub
