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

#include "eub/measurement.hpp"

#include <numbers>
#include <stdexcept>

#include "eub/kernels.hpp"

namespace eub {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

std::vector<std::vector<int>> default_labels(Index n) {
  std::vector<std::vector<int>> out(n);
  for (Index i = 0; i < n; ++i) out[i] = {static_cast<int>(i)};
  return out;
}

// Largest eigenvalue of a (numerically) positive Hermitian operator; this is
// the operator norm for every norm argument used here.
double positive_operator_norm(const Mat& h) {
  const RVec ev = hermitian_eigenvalues(h);
  return std::max(0.0, ev.maxCoeff());
}

}  // namespace

Index Measurement::dim() const {
  return kind == Kind::Basis ? unitary.rows() : elements.front().rows();
}

Index Measurement::outcomes() const {
  return kind == Kind::Basis ? unitary.cols() : static_cast<Index>(elements.size());
}

Mat Measurement::element(Index k) const {
  if (kind == Kind::Basis) {
    const Vec v = unitary.col(k);
    return v * v.adjoint();
  }
  return elements[static_cast<std::size_t>(k)];
}

Mat Measurement::sqrt_element(Index k) const {
  if (kind == Kind::Basis) return element(k);  // projectors are their own roots
  return matrix_sqrt(elements[static_cast<std::size_t>(k)], kPovmSqrtCutoff);
}

Measurement Measurement::basis(Mat u, std::vector<std::vector<int>> labels) {
  require(u.rows() == u.cols(), "Measurement::basis: unitary not square");
  require((u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() <=
              tol::basis_unitarity,
          "Measurement::basis: columns not orthonormal");
  if (labels.empty()) labels = default_labels(u.cols());
  require(static_cast<Index>(labels.size()) == u.cols(),
          "Measurement::basis: label count mismatch");
  return Measurement{Kind::Basis, std::move(u), {}, std::move(labels)};
}

Measurement Measurement::povm(std::vector<Mat> elements,
                              std::vector<std::vector<int>> labels) {
  require(!elements.empty(), "Measurement::povm: no elements");
  const Index d = elements.front().rows();
  Mat total = Mat::Zero(d, d);
  for (const Mat& e : elements) {
    require(e.rows() == d && e.cols() == d, "Measurement::povm: element size mismatch");
    require(hermitian_eigenvalues(e).minCoeff() >= -tol::povm_positivity,
            "Measurement::povm: element not positive");
    total += e;
  }
  require((total - Mat::Identity(d, d)).cwiseAbs().maxCoeff() <= tol::povm_completeness,
          "Measurement::povm: elements do not sum to identity");
  if (labels.empty()) labels = default_labels(static_cast<Index>(elements.size()));
  require(labels.size() == elements.size(), "Measurement::povm: label count mismatch");
  return Measurement{Kind::Povm, {}, std::move(elements), std::move(labels)};
}

Measurement computational_basis(Index d) {
  return Measurement::basis(Mat::Identity(d, d));
}

Mat fourier_matrix(Index d) {
  Mat f(d, d);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k)
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                           step * static_cast<double>(j) * static_cast<double>(k));
  return f;
}

OverlapMatrix overlap_matrix(const Measurement& x, const Measurement& z) {
  require(x.kind == Measurement::Kind::Basis && z.kind == Measurement::Kind::Basis,
          "overlap_matrix: both measurements must be bases (use povm_overlap_h)");
  require(x.dim() == z.dim(), "overlap_matrix: dimension mismatch");
  const Mat inner = z.unitary.adjoint() * x.unitary;  // inner(z, x) = <Z^z|X^x>
  RMat c(x.outcomes(), z.outcomes());
  for (Index xx = 0; xx < c.rows(); ++xx)
    for (Index zz = 0; zz < c.cols(); ++zz) c(xx, zz) = std::norm(inner(zz, xx));
  return OverlapMatrix{std::move(c)};
}

RMat povm_overlap_h(const Measurement& x, const Measurement& z) {
  require(x.dim() == z.dim(), "povm_overlap_h: dimension mismatch");
  RMat h(x.outcomes(), z.outcomes());
  for (Index zz = 0; zz < z.outcomes(); ++zz) {
    const Mat rz = z.sqrt_element(zz);
    for (Index xx = 0; xx < x.outcomes(); ++xx)
      h(xx, zz) = positive_operator_norm(rz * x.element(xx) * rz);
  }
  return h;
}

JointDistribution joint_distribution(const DensityOperator& rho_ab,
                                     const Measurement& ma, const Measurement& mb) {
  require(rho_ab.dims.size() == 2, "joint_distribution: state is not bipartite");
  const Index da = rho_ab.dims[0], db = rho_ab.dims[1];
  require(ma.dim() == da && mb.dim() == db, "joint_distribution: dimension mismatch");

  RMat table(ma.outcomes(), mb.outcomes());
  if (ma.kind == Measurement::Kind::Basis && mb.kind == Measurement::Kind::Basis) {
    // P(x, y) = |(<x| (x) <y|) (U_A (x) U_B)^dagger psi|^2 summed over the
    // spectral decomposition; equivalently the diagonal of the rotated state.
    const Mat u = tensor_product(ma.unitary, mb.unitary);
    const Mat rotated = u.adjoint() * rho_ab.mat * u;
    for (Index xx = 0; xx < da; ++xx)
      for (Index yy = 0; yy < db; ++yy) table(xx, yy) = rotated(xx * db + yy, xx * db + yy).real();
  } else {
    for (Index xx = 0; xx < ma.outcomes(); ++xx) {
      // sigma_x = Tr_A[(X^x (x) 1) rho], then P(x, y) = Tr[Y^y sigma_x].
      const Mat ex = ma.element(xx);
      Mat sigma = Mat::Zero(db, db);
      for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < da; ++j)
          if (ex(j, i) != Complex(0.0))
            sigma += ex(j, i) * rho_ab.mat.block(i * db, j * db, db, db);
      for (Index yy = 0; yy < mb.outcomes(); ++yy)
        table(xx, yy) = (mb.element(yy) * sigma).trace().real();
  }
  }
  return JointDistribution::checked(std::move(table), ma.labels, mb.labels);
}

JointDistribution joint_distribution(const PureStateVector& psi,
                                     const Measurement& ma, const Measurement& mb) {
  require(psi.dims.size() == 2, "joint_distribution: state is not bipartite");
  if (ma.kind != Measurement::Kind::Basis || mb.kind != Measurement::Kind::Basis)
    return joint_distribution(psi.density(), ma, mb);
  const Index da = psi.dims[0], db = psi.dims[1];
  require(ma.dim() == da && mb.dim() == db, "joint_distribution: dimension mismatch");
  const Eigen::Map<const Mat> m(psi.amps.data(), db, da);  // column-major view
  // amplitude(x, y) = <X^x| (x) <Y^y| psi
  const Mat rotated = ma.unitary.adjoint() * m.transpose() * mb.unitary.conjugate();
  RMat table(da, db);
  kernels::squared_modulus(rotated.data(), table.data(),
                           static_cast<std::size_t>(rotated.size()));
  // both matrices are column-major, so the elementwise map preserves (x, y)
  return JointDistribution::checked(std::move(table), ma.labels, mb.labels);
}

DensityOperator post_measure(const DensityOperator& rho, const Measurement& z, int site) {
  const Index nsub = static_cast<Index>(rho.dims.size());
  require(site >= 0 && site < nsub, "post_measure: invalid site");
  require(z.dim() == rho.dims[static_cast<std::size_t>(site)],
          "post_measure: dimension mismatch");

  const Index dsite = z.dim();
  Index left = 1, right = 1;
  for (Index s = 0; s < site; ++s) left *= rho.dims[static_cast<std::size_t>(s)];
  for (Index s = site + 1; s < nsub; ++s) right *= rho.dims[static_cast<std::size_t>(s)];
  const Mat il = Mat::Identity(left, left);
  const Mat ir = Mat::Identity(right, right);

  if (z.kind == Measurement::Kind::Basis) {
    Mat out = Mat::Zero(rho.dim(), rho.dim());
    for (Index k = 0; k < dsite; ++k) {
      const Mat pk = tensor_product(il, tensor_product(z.element(k), ir));
      out += pk * rho.mat * pk;
    }
    return DensityOperator{std::move(out), rho.dims};
  }

  const Index n_out = z.outcomes();
  Mat out = Mat::Zero(n_out * rho.dim(), n_out * rho.dim());
  for (Index k = 0; k < n_out; ++k) {
    const Mat rk = tensor_product(il, tensor_product(z.sqrt_element(k), ir));
    out.block(k * rho.dim(), k * rho.dim(), rho.dim(), rho.dim()) = rk * rho.mat * rk;
  }
  DimList dims{n_out};
  dims.insert(dims.end(), rho.dims.begin(), rho.dims.end());
  return DensityOperator{std::move(out), std::move(dims)};
}

DensityOperator isometry_extend(const DensityOperator& rho_ab, const Measurement& z) {
  require(rho_ab.dims.size() == 2, "isometry_extend: state is not bipartite");
  const Index da = rho_ab.dims[0], db = rho_ab.dims[1], d = rho_ab.dim();
  require(z.dim() == da, "isometry_extend: dimension mismatch");
  const Index k = z.outcomes();
  Mat v = Mat::Zero(k * k * d, d);
  const Mat ib = Mat::Identity(db, db);
  for (Index x = 0; x < k; ++x)
    v.block((x * k + x) * d, 0, d, d) = tensor_product(z.sqrt_element(x), ib);
  return DensityOperator{v * rho_ab.mat * v.adjoint(), DimList{k, k, da, db}};
}

double residual_conditional(const DensityOperator& rho_ab, const Measurement& z) {
  require(rho_ab.dims.size() == 2, "residual_conditional: state is not bipartite");
  require(z.dim() == rho_ab.dims[0], "residual_conditional: dimension mismatch");
  const Index db = rho_ab.dims[1];
  const Mat ib = Mat::Identity(db, db);
  double out = 0.0;
  for (Index k = 0; k < z.outcomes(); ++k) {
    const Mat rk = tensor_product(z.sqrt_element(k), ib);
    Mat branch = rk * rho_ab.mat * rk;
    const double pk = branch.trace().real();
    if (pk < tol::marginal_cutoff) continue;
    branch /= pk;
    out += pk * conditional_quantum(DensityOperator{std::move(branch), rho_ab.dims});
  }
  return out;
}

QuantumClassicalCheck is_quantum_classical(const DensityOperator& rho_ab, double tol) {
  require(rho_ab.dims.size() == 2, "is_quantum_classical: state is not bipartite");
  const DensityOperator rho_b = partial_trace(rho_ab, 1);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho_b.mat + rho_b.mat.adjoint()));

  QuantumClassicalCheck out;
  const RVec& ev = es.eigenvalues();
  for (Index i = 0; i + 1 < ev.size(); ++i)
    if (std::abs(ev(i + 1) - ev(i)) < 1e-8) out.degenerate_spectrum = true;

  const Measurement eigenbasis = Measurement::basis(es.eigenvectors());
  const DensityOperator dephased = post_measure(rho_ab, eigenbasis, 1);
  out.max_deviation = (rho_ab.mat - dephased.mat).cwiseAbs().maxCoeff();
  out.quantum_classical = out.max_deviation <= tol;
  out.discord_gap = conditional_quantum(dephased) - conditional_quantum(rho_ab);
  return out;
}

}  // namespace eub
