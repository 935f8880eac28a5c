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

#include "eub/qmath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eub {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

Mat symmetrized(const Mat& h) { return 0.5 * (h + h.adjoint()); }

}  // namespace

DensityOperator DensityOperator::checked(Mat m, DimList dims) {
  require(m.rows() == m.cols(), "DensityOperator: matrix not square");
  require(dim_product(dims) == m.rows(), "DensityOperator: dims do not match matrix");
  require((m - m.adjoint()).cwiseAbs().maxCoeff() <= tol::hermitian,
          "DensityOperator: not Hermitian");
  require(std::abs(m.trace().real() - 1.0) <= tol::trace_one &&
              std::abs(m.trace().imag()) <= tol::trace_one,
          "DensityOperator: trace != 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(m), Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() >= -tol::positivity,
          "DensityOperator: negative eigenvalue");
  return DensityOperator{std::move(m), std::move(dims)};
}

PureStateVector PureStateVector::checked(Vec a, DimList dims) {
  require(dim_product(dims) == a.size(), "PureStateVector: dims do not match vector");
  require(std::abs(a.squaredNorm() - 1.0) <= tol::unit_norm,
          "PureStateVector: not normalized");
  return PureStateVector{std::move(a), std::move(dims)};
}

DensityOperator PureStateVector::density() const {
  return DensityOperator{amps * amps.adjoint(), dims};
}

Mat tensor_product(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec tensor_product_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const int> keep) {
  const Index nsub = static_cast<Index>(rho.dims.size());
  require(!keep.empty(), "partial_trace: empty keep list");
  std::vector<char> kept(nsub, 0);
  for (int k : keep) {
    require(k >= 0 && k < nsub, "partial_trace: invalid subsystem index");
    require(!kept[k], "partial_trace: duplicate subsystem index");
    kept[k] = 1;
  }
  require(std::is_sorted(keep.begin(), keep.end()), "partial_trace: keep must be ascending");

  // Strides of each subsystem in the flat index (first subsystem slowest).
  std::vector<Index> stride(nsub, 1);
  for (Index s = nsub - 2; s >= 0; --s) stride[s] = stride[s + 1] * rho.dims[s + 1];

  DimList kept_dims, traced_dims;
  std::vector<Index> kept_stride, traced_stride;
  for (Index s = 0; s < nsub; ++s) {
    if (kept[s]) {
      kept_dims.push_back(rho.dims[s]);
      kept_stride.push_back(stride[s]);
    } else {
      traced_dims.push_back(rho.dims[s]);
      traced_stride.push_back(stride[s]);
    }
  }
  const Index dk = dim_product(kept_dims);
  const Index dt = dim_product(traced_dims);

  // Flat offsets of every kept / traced multi-index.
  auto offsets = [](const DimList& dims, const std::vector<Index>& strides, Index total) {
    std::vector<Index> out(total, 0);
    for (Index flat = 0; flat < total; ++flat) {
      Index rem = flat;
      for (std::size_t s = dims.size(); s-- > 0;) {
        out[flat] += (rem % dims[s]) * strides[s];
        rem /= dims[s];
      }
    }
    return out;
  };
  const std::vector<Index> koff = offsets(kept_dims, kept_stride, dk);
  const std::vector<Index> toff = offsets(traced_dims, traced_stride, dt);

  Mat out = Mat::Zero(dk, dk);
  for (Index i = 0; i < dk; ++i)
    for (Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (Index t = 0; t < dt; ++t) acc += rho.mat(koff[i] + toff[t], koff[j] + toff[t]);
      out(i, j) = acc;
    }
  return DensityOperator{std::move(out), std::move(kept_dims)};
}

DensityOperator partial_trace(const DensityOperator& rho, int keep) {
  const int idx[1] = {keep};
  return partial_trace(rho, std::span<const int>(idx, 1));
}

RVec hermitian_eigenvalues(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Mat spectral_function(const Mat& h, const std::function<Complex(double)>& f,
                      double rel_cutoff) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(h));
  const RVec& ev = es.eigenvalues();
  const double cut = rel_cutoff * ev.cwiseAbs().maxCoeff();
  // Eigenvalues inside the cutoff are snapped to exactly 0 before f sees
  // them, so pseudo-functions can special-case the nullspace.
  Vec w(ev.size());
  for (Index i = 0; i < ev.size(); ++i) w(i) = f(std::abs(ev(i)) < cut ? 0.0 : ev(i));
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

Mat matrix_sqrt(const Mat& h, double rel_cutoff) {
  return spectral_function(
      h,
      [](double x) -> Complex {
        if (x < 0.0) throw std::domain_error("matrix_sqrt: negative eigenvalue");
        return std::sqrt(x);
      },
      rel_cutoff);
}

Mat matrix_inv_sqrt(const Mat& h, double rel_cutoff) {
  return spectral_function(
      h,
      [](double x) -> Complex {
        if (x < 0.0) throw std::domain_error("matrix_inv_sqrt: negative eigenvalue");
        return x == 0.0 ? 0.0 : 1.0 / std::sqrt(x);
      },
      rel_cutoff);
}

SchmidtDecomposition schmidt(const PureStateVector& psi) {
  require(psi.dims.size() == 2, "schmidt: state must have exactly two subsystems");
  const Index da = psi.dims[0], db = psi.dims[1];
  Mat m(da, db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) m(i, j) = psi.amps(i * db + j);
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  // psi = sum_k c_k u_k (x) conj(v_k) from m = U S V^dagger.
  return SchmidtDecomposition{svd.singularValues(), svd.matrixU(),
                              svd.matrixV().conjugate()};
}

PureStateVector purify(const DensityOperator& rho, double rel_cutoff) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrized(rho.mat));
  const RVec& ev = es.eigenvalues();
  const double cut = rel_cutoff * ev.cwiseAbs().maxCoeff();
  std::vector<Index> support;
  for (Index i = ev.size() - 1; i >= 0; --i)
    if (ev(i) > cut) support.push_back(i);  // descending eigenvalue order
  const Index rank = static_cast<Index>(support.size());
  const Index d = rho.dim();
  Vec amps = Vec::Zero(d * rank);
  for (Index k = 0; k < rank; ++k) {
    const double w = std::sqrt(ev(support[k]));
    for (Index i = 0; i < d; ++i) amps(i * rank + k) = w * es.eigenvectors()(i, support[k]);
  }
  amps /= amps.norm();
  return PureStateVector{std::move(amps), DimList{d, rank}};
}

}  // namespace eub
