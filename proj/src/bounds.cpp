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

#include "eub/bounds.hpp"

#include <cfloat>
#include <stdexcept>

#include "eub/kernels.hpp"

namespace eub {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

double positive_operator_norm(const Mat& h) {
  const RVec ev = hermitian_eigenvalues(h);
  return std::max(0.0, ev.maxCoeff());
}

// Shared core of q_fsd / q_fsdp: -sum_{x,y} P_XY(x,y) log2 (overlap *
// conditional)(x,y) with the Y-marginal conditioning rule.
double q_fully_state_dependent(const RMat& overlap, const JointDistribution& p_xy,
                               const JointDistribution& p_zy) {
  require(p_xy.table.cols() == p_zy.table.cols(),
          "q_fsd: joints do not share the Y axis");
  require(overlap.rows() == p_xy.table.rows() && overlap.cols() == p_zy.table.rows(),
          "q_fsd: overlap table shape mismatch");
  const RVec my = p_zy.marginal_y();
  RMat cond = p_zy.table;
  RMat weights = p_xy.table;
  for (Index y = 0; y < cond.cols(); ++y) {
    if (my(y) < tol::marginal_cutoff) {
      // No conditional distribution exists here; the matching P_XY column
      // carries the same negligible mass and is dropped from the sum.
      cond.col(y).setZero();
      weights.col(y).setZero();
    } else {
      cond.col(y) /= my(y);
    }
  }
  const RMat inner = overlap * cond;
  return kernels::neg_weighted_log2(weights.data(), inner.data(),
                                    static_cast<std::size_t>(inner.size()), DBL_MIN);
}

}  // namespace

double q_mu(const OverlapMatrix& c) { return -std::log2(c.c.maxCoeff()); }

double q_fl(const Measurement& x, const Measurement& z) {
  require(x.dim() == z.dim(), "q_fl: dimension mismatch");
  double cmax = 0.0;
  for (Index xx = 0; xx < x.outcomes(); ++xx) {
    const Mat ex = x.element(xx);
    for (Index zz = 0; zz < z.outcomes(); ++zz)
      cmax = std::max(cmax, (ex * z.element(zz)).trace().real());
  }
  return -std::log2(cmax);
}

double q_ct(const Measurement& x, const Measurement& z) {
  require(x.dim() == z.dim(), "q_ct: dimension mismatch");
  const Index d = x.dim();
  // c_T = max_z || sum_x X^x Z^z X^x ||: the X-measurement channel applied
  // to each Z element.  Summing over the sandwiching index keeps the factor
  // from collapsing through POVM completeness; for rank-1 projective pairs
  // it reduces to the maximal overlap.
  double ct = 0.0;
  for (Index zz = 0; zz < z.outcomes(); ++zz) {
    const Mat ez = z.element(zz);
    Mat acc = Mat::Zero(d, d);
    for (Index xx = 0; xx < x.outcomes(); ++xx) {
      const Mat ex = x.element(xx);
      acc += ex * ez * ex;
    }
    ct = std::max(ct, positive_operator_norm(acc));
  }
  return -std::log2(ct);
}

double q_c(const OverlapMatrix& c, const RVec& p_x) {
  require(c.c.rows() == p_x.size(), "q_c: marginal length mismatch");
  const RVec px = clean_probabilities(p_x);
  const RVec row_max = c.c.rowwise().maxCoeff();
  return kernels::neg_weighted_log2(px.data(), row_max.data(),
                                    static_cast<std::size_t>(px.size()), DBL_MIN);
}

double q_fsd(const OverlapMatrix& c, const JointDistribution& p_xy,
             const JointDistribution& p_zy) {
  return q_fully_state_dependent(c.c, p_xy, p_zy);
}

double q_fsdp(const RMat& h, const JointDistribution& p_xy,
              const JointDistribution& p_zy) {
  return q_fully_state_dependent(h, p_xy, p_zy);
}

double q_pn(const RVec& sector_maxima, const RVec& p_n) {
  require(sector_maxima.size() == p_n.size(), "q_pn: label mismatch");
  const RVec pn = clean_probabilities(p_n);
  return kernels::neg_weighted_log2(pn.data(), sector_maxima.data(),
                                    static_cast<std::size_t>(pn.size()), DBL_MIN);
}

BoundReport assemble_bound(std::string relation, double q, double h_xx, double h_zz,
                           double residual, std::optional<double> exact_neg_hab,
                           bool swapped) {
  BoundReport r;
  r.relation = std::move(relation);
  r.q = q;
  r.h_xx = h_xx;
  r.h_zz = h_zz;
  r.residual = residual;
  r.bound = q - h_xx - h_zz - residual;
  r.exact_neg_hab = exact_neg_hab;
  r.swapped = swapped;
  return r;
}

double witness_povm(const DensityOperator& rho_ab, const Measurement& z) {
  return conditional_quantum(rho_ab) - residual_conditional(rho_ab, z);
}

ConservedQuantity ConservedQuantity::checked(std::vector<Sector> sectors, Index da,
                                             Index db) {
  require(!sectors.empty(), "ConservedQuantity: no sectors");
  Mat total = Mat::Zero(da * db, da * db);
  for (const Sector& s : sectors) {
    require(s.proj_a.rows() == da && s.proj_b.rows() == db,
            "ConservedQuantity: projector size mismatch");
    require((s.proj_a * s.proj_a - s.proj_a).cwiseAbs().maxCoeff() <= 1e-9 &&
                (s.proj_b * s.proj_b - s.proj_b).cwiseAbs().maxCoeff() <= 1e-9,
            "ConservedQuantity: projector not idempotent");
    total += tensor_product(s.proj_a, s.proj_b);
  }
  require((total - Mat::Identity(da * db, da * db)).cwiseAbs().maxCoeff() <= 1e-9,
          "ConservedQuantity: sectors do not resolve the identity");
  for (std::size_t i = 0; i < sectors.size(); ++i)
    for (std::size_t j = i + 1; j < sectors.size(); ++j) {
      const Mat pa = sectors[i].proj_a * sectors[j].proj_a;
      const Mat pb = sectors[i].proj_b * sectors[j].proj_b;
      require(pa.cwiseAbs().maxCoeff() <= 1e-9 || pb.cwiseAbs().maxCoeff() <= 1e-9,
              "ConservedQuantity: sectors not mutually orthogonal");
    }
  return ConservedQuantity{std::move(sectors)};
}

DensityOperator project_conserved(const DensityOperator& rho_ab,
                                  const ConservedQuantity& n) {
  require(rho_ab.dims.size() == 2, "project_conserved: state is not bipartite");
  Mat out = Mat::Zero(rho_ab.dim(), rho_ab.dim());
  for (const auto& s : n.sectors) {
    const Mat p = tensor_product(s.proj_a, s.proj_b);
    out += p * rho_ab.mat * p;
  }
  return DensityOperator{std::move(out), rho_ab.dims};
}

NumberDecomposition number_decomposition(const PureStateVector& psi,
                                         const ConservedQuantity& n) {
  require(psi.dims.size() == 2, "number_decomposition: state is not bipartite");
  const DensityOperator rho = psi.density();
  NumberDecomposition out;
  out.sector_weights.resize(static_cast<Index>(n.sectors.size()));
  for (std::size_t k = 0; k < n.sectors.size(); ++k) {
    const Mat p = tensor_product(n.sectors[k].proj_a, n.sectors[k].proj_b);
    out.sector_weights(static_cast<Index>(k)) =
        std::max(0.0, (psi.amps.adjoint() * p * psi.amps)(0).real());
  }
  out.number_entropy = shannon(out.sector_weights);
  out.configurational = -conditional_quantum(project_conserved(rho, n));
  return out;
}

}  // namespace eub
