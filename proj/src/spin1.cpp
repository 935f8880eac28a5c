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

#include "eub/spin1.hpp"

#include <cfloat>
#include <numbers>
#include <random>
#include <stdexcept>

#include "eub/kernels.hpp"
#include "eub/parallel.hpp"
#include "eub/verify.hpp"

namespace eub::spin1 {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

Index sector_dim(int n) { return static_cast<Index>((n + 1) * (n + 2) / 2); }

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out *= static_cast<double>(n - k + i) / i;
  return out;
}

// Overlap entries are probabilities; clip eigensolver overshoot above 1.
double clamp_overlap(double c) { return (c > 1.0 && c < 1.0 + 1e-9) ? 1.0 : c; }

}  // namespace

FockBasis FockBasis::make(int n) {
  require(n >= 0, "FockBasis: negative particle number");
  FockBasis b;
  b.total = n;
  for (int n1 = n; n1 >= 0; --n1)
    for (int n0 = n - n1; n0 >= 0; --n0) b.states.push_back({n1, n0, n - n1 - n0});
  return b;
}

Index FockBasis::index(const std::array<int, 3>& occ) const {
  require(occ[0] >= 0 && occ[1] >= 0 && occ[2] >= 0 &&
              occ[0] + occ[1] + occ[2] == total,
          "FockBasis: occupation outside the basis");
  const Index rest = static_cast<Index>(total - occ[0]);
  return rest * (rest + 1) / 2 + (rest - occ[1]);
}

Mat ladder_quadratic(const FockBasis& basis, const Eigen::Matrix3cd& c) {
  const Index d = basis.size();
  Mat h = Mat::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const auto& occ = basis.states[static_cast<std::size_t>(i)];
    for (int j = 0; j < 3; ++j) {
      if (c(j, j) != Complex(0.0)) h(i, i) += c(j, j) * static_cast<double>(occ[j]);
      for (int k = 0; k < 3; ++k) {
        if (j == k || c(j, k) == Complex(0.0) || occ[k] == 0) continue;
        auto target = occ;
        --target[k];
        ++target[j];
        const double amp =
            std::sqrt(static_cast<double>(target[j]) * static_cast<double>(occ[k]));
        h(basis.index(target), i) += c(j, k) * amp;
      }
    }
  }
  return h;
}

Mat represent(const Eigen::Matrix3cd& u, int n, bool* branch_flagged) {
  require(n >= 0, "represent: negative sector");
  require((u.adjoint() * u - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() < 1e-8,
          "represent: input not unitary");
  // principal-branch logarithm through the Schur form (diagonal for unitary u)
  const Eigen::ComplexSchur<Eigen::Matrix3cd> schur(u);
  Eigen::Matrix3cd log_t = Eigen::Matrix3cd::Zero();
  bool flagged = false;
  for (int i = 0; i < 3; ++i) {
    const Complex ev = schur.matrixT()(i, i);
    const double arg = std::arg(ev);
    if (std::abs(std::abs(arg) - std::numbers::pi) < 1e-6) flagged = true;
    log_t(i, i) = Complex(0.0, arg);
  }
  if (branch_flagged) *branch_flagged = flagged;
  const Eigen::Matrix3cd gen = schur.matrixU() * log_t * schur.matrixU().adjoint();
  // u = exp(i C) with C Hermitian; R^(n) = exp(i ladder(C))
  const Eigen::Matrix3cd half = Complex(0, -1) * gen;
  const Eigen::Matrix3cd c = 0.5 * (half + half.adjoint().eval());
  if (n == 0) return Mat::Identity(1, 1);
  const FockBasis basis = FockBasis::make(n);
  return spectral_function(ladder_quadratic(basis, c),
                           [](double x) { return std::exp(Complex(0.0, x)); });
}

Eigen::Matrix3cd fourier3() {
  Eigen::Matrix3cd f;
  const Complex lead = Complex(0.0, 1.0) / std::sqrt(3.0);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      f(j, k) = lead * std::polar(1.0, 2.0 * std::numbers::pi * j * k / 3.0);
  return f;
}

Eigen::Matrix3cd phase_rotation(double phi1, double phi0, double phim1) {
  Eigen::Matrix3cd d = Eigen::Matrix3cd::Zero();
  d(0, 0) = std::polar(1.0, phi1);
  d(1, 1) = std::polar(1.0, phi0);
  d(2, 2) = std::polar(1.0, phim1);
  return d;
}

Eigen::Matrix3cd spin_y_matrix() {
  Eigen::Matrix3cd s = Eigen::Matrix3cd::Zero();
  const Complex v = Complex(0.0, 1.0) / std::sqrt(2.0);
  s(1, 0) = v;
  s(0, 1) = -v;
  s(2, 1) = v;
  s(1, 2) = -v;
  return s;
}

namespace {

Eigen::Matrix3cd matrix_exp3(const Eigen::Matrix3cd& a) {
  // exp through the Hermitian spectral path: a = i h with h Hermitian
  const Eigen::Matrix3cd h = Complex(0, -1) * a;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(h);
  Eigen::Vector3cd w;
  for (int i = 0; i < 3; ++i) w(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Eigen::Matrix3cd squeeze_rotation() {
  const double pi = std::numbers::pi;
  const Eigen::Matrix3cd n0_phase = phase_rotation(0.0, -pi / 4.0, 0.0);
  return n0_phase * matrix_exp3(Complex(0, -1) * (pi / 2.0) * spin_y_matrix());
}

Eigen::Matrix3cd antisqueeze_rotation() {
  const double pi = std::numbers::pi;
  const Eigen::Matrix3cd n0_phase = phase_rotation(0.0, -3.0 * pi / 4.0, 0.0);
  return n0_phase * matrix_exp3(Complex(0, -1) * (pi / 2.0) * spin_y_matrix());
}

SpinRotation SpinRotation::identity(int max_sector) {
  SpinRotation r;
  r.kind_ = Kind::Identity;
  r.max_sector_ = max_sector;
  return r;
}

SpinRotation SpinRotation::diagonal_phases(const Eigen::Vector3d& phi, int max_sector) {
  SpinRotation r;
  r.kind_ = Kind::Diagonal;
  r.u_ = phase_rotation(phi(0), phi(1), phi(2));
  r.max_sector_ = max_sector;
  r.diag_.resize(static_cast<std::size_t>(max_sector) + 1);
  for (int n = 0; n <= max_sector; ++n) {
    const FockBasis basis = FockBasis::make(n);
    Vec d(basis.size());
    for (Index i = 0; i < basis.size(); ++i) {
      const auto& occ = basis.states[static_cast<std::size_t>(i)];
      d(i) = std::polar(1.0, occ[0] * phi(0) + occ[1] * phi(1) + occ[2] * phi(2));
    }
    r.diag_[static_cast<std::size_t>(n)] = std::move(d);
  }
  return r;
}

SpinRotation::SpinRotation(const Eigen::Matrix3cd& u, int max_sector, int threads) {
  kind_ = Kind::Dense;
  u_ = u;
  max_sector_ = max_sector;
  dense_.resize(static_cast<std::size_t>(max_sector) + 1);
  std::vector<char> flags(static_cast<std::size_t>(max_sector) + 1, 0);
  parallel_for(static_cast<std::size_t>(max_sector) + 1, threads, [&](std::size_t n) {
    bool flag = false;
    dense_[n] = represent(u, static_cast<int>(n), &flag);
    flags[n] = flag ? 1 : 0;
  });
  for (char f : flags) branch_flagged_ |= (f != 0);
}

Mat SpinRotation::sector(int n) const {
  require(n >= 0 && n <= max_sector_, "SpinRotation: sector out of range");
  switch (kind_) {
    case Kind::Identity:
      return Mat::Identity(sector_dim(n), sector_dim(n));
    case Kind::Diagonal:
      return Mat(diag_[static_cast<std::size_t>(n)].asDiagonal());
    case Kind::Dense:
      return dense_[static_cast<std::size_t>(n)];
  }
  return {};
}

Mat SpinRotation::apply_left(const Mat& block, int n) const {
  require(n >= 0 && n <= max_sector_, "SpinRotation: sector out of range");
  switch (kind_) {
    case Kind::Identity:
      return block;
    case Kind::Diagonal:
      return diag_[static_cast<std::size_t>(n)].asDiagonal() * block;
    case Kind::Dense:
      return dense_[static_cast<std::size_t>(n)] * block;
  }
  return {};
}

Mat SpinRotation::apply_right(const Mat& block, int n) const {
  require(n >= 0 && n <= max_sector_, "SpinRotation: sector out of range");
  switch (kind_) {
    case Kind::Identity:
      return block;
    case Kind::Diagonal:
      return block * diag_[static_cast<std::size_t>(n)].asDiagonal();
    case Kind::Dense:
      return block * dense_[static_cast<std::size_t>(n)].transpose();
  }
  return {};
}

Mat spin_mixing_hamiltonian(const FockBasis& basis, double g, double q) {
  const Index d = basis.size();
  Mat h = Mat::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const auto& occ = basis.states[static_cast<std::size_t>(i)];
    const double transverse = occ[0] + occ[2];
    h(i, i) += g * (occ[1] - 0.5) * transverse + q * transverse;
    if (occ[1] >= 2) {
      // a1† a-1† a0 a0
      const auto target = std::array<int, 3>{occ[0] + 1, occ[1] - 2, occ[2] + 1};
      const double amp =
          std::sqrt(static_cast<double>(occ[0] + 1) * static_cast<double>(occ[2] + 1) *
                    static_cast<double>(occ[1]) * static_cast<double>(occ[1] - 1));
      h(basis.index(target), i) += g * amp;
    }
    if (occ[0] >= 1 && occ[2] >= 1) {
      // a0† a0† a1 a-1
      const auto target = std::array<int, 3>{occ[0] - 1, occ[1] + 2, occ[2] - 1};
      const double amp =
          std::sqrt(static_cast<double>(occ[0]) * static_cast<double>(occ[2]) *
                    static_cast<double>(occ[1] + 1) * static_cast<double>(occ[1] + 2));
      h(basis.index(target), i) += g * amp;
    }
  }
  return h;
}

Mat spin_operator(const FockBasis& basis, double phi) {
  Eigen::Matrix3cd c = Eigen::Matrix3cd::Zero();
  const Complex front = Complex(0.0, 1.0) / std::sqrt(2.0) * std::polar(1.0, -phi);
  c(1, 0) = front;   // a0† a1
  c(1, 2) = -front;  // a0† a-1
  c(0, 1) = std::conj(c(1, 0));
  c(2, 1) = std::conj(c(1, 2));
  return ladder_quadratic(basis, c);
}

Evolution::Evolution(const Mat& h) : es_(0.5 * (h + h.adjoint())) {}

Vec Evolution::at(const Vec& psi0, double t) const {
  const Vec coeffs = es_.eigenvectors().adjoint() * psi0;
  Vec phased(coeffs.size());
  for (Index i = 0; i < coeffs.size(); ++i)
    phased(i) = coeffs(i) * std::exp(Complex(0.0, -es_.eigenvalues()(i) * t));
  return es_.eigenvectors() * phased;
}

Vec polar_state(const FockBasis& basis) {
  Vec psi = Vec::Zero(basis.size());
  psi(basis.index({0, basis.total, 0})) = 1.0;
  return psi;
}

Vec squeezed_reference(const FockBasis& basis, double r) {
  Vec psi = Vec::Zero(basis.size());
  const Complex factor = Complex(0.0, -1.0) * std::tanh(r);
  Complex amp = 1.0;
  for (int n = 0; 2 * n <= basis.total; ++n) {
    psi(basis.index({n, basis.total - 2 * n, n})) = amp;
    amp *= factor;
  }
  psi /= psi.norm();
  return psi;
}

RVec SectorBlockedState::sector_weights() const {
  RVec w(static_cast<Index>(blocks.size()));
  for (std::size_t n = 0; n < blocks.size(); ++n)
    w(static_cast<Index>(n)) = blocks[n].squaredNorm();
  return w;
}

double SectorBlockedState::squared_norm() const { return sector_weights().sum(); }

SectorBlockedState beamsplit(const Vec& psi, const FockBasis& basis) {
  require(psi.size() == basis.size(), "beamsplit: state does not match basis");
  const int n_total = basis.total;
  SectorBlockedState out;
  out.total = n_total;
  std::vector<FockBasis> local;
  for (int n = 0; n <= n_total; ++n) local.push_back(FockBasis::make(n));
  out.blocks.resize(static_cast<std::size_t>(n_total) + 1);
  for (int n = 0; n <= n_total; ++n)
    out.blocks[static_cast<std::size_t>(n)] =
        Mat::Zero(local[static_cast<std::size_t>(n)].size(),
                  local[static_cast<std::size_t>(n_total - n)].size());

  const double scale = std::pow(0.5, 0.5 * n_total);
  for (Index i = 0; i < basis.size(); ++i) {
    const Complex amp = psi(i);
    if (amp == Complex(0.0)) continue;
    const auto& occ = basis.states[static_cast<std::size_t>(i)];
    for (int m1 = 0; m1 <= occ[0]; ++m1)
      for (int m0 = 0; m0 <= occ[1]; ++m0)
        for (int mm = 0; mm <= occ[2]; ++mm) {
          const int n = m1 + m0 + mm;
          const double weight = std::sqrt(binomial(occ[0], m1) * binomial(occ[1], m0) *
                                          binomial(occ[2], mm));
          const Index row = local[static_cast<std::size_t>(n)].index({m1, m0, mm});
          const Index col = local[static_cast<std::size_t>(n_total - n)].index(
              {occ[0] - m1, occ[1] - m0, occ[2] - mm});
          out.blocks[static_cast<std::size_t>(n)](row, col) += amp * weight * scale;
        }
  }
  return out;
}

SectorDistribution bipartite_distribution(const SectorBlockedState& state,
                                          const SpinRotation& ua,
                                          const SpinRotation& ub) {
  require(ua.max_sector() >= state.total && ub.max_sector() >= state.total,
          "bipartite_distribution: rotation caches too small");
  SectorDistribution out;
  out.total = state.total;
  out.blocks.resize(state.blocks.size());
  for (int n = 0; n <= state.total; ++n) {
    const Mat rotated = ub.apply_right(
        ua.apply_left(state.blocks[static_cast<std::size_t>(n)], n), state.total - n);
    RMat p(rotated.rows(), rotated.cols());
    kernels::squared_modulus(rotated.data(), p.data(),
                             static_cast<std::size_t>(rotated.size()));
    out.blocks[static_cast<std::size_t>(n)] = std::move(p);
  }
  return out;
}

double SectorDistribution::sum() const {
  double s = 0.0;
  for (const RMat& b : blocks) s += b.sum();
  return s;
}

double conditional_a_given_b(const SectorDistribution& p) {
  double h_joint = 0.0;
  double h_y = 0.0;
  for (const RMat& b : p.blocks) {
    h_joint += kernels::entropy_bits(b.data(), static_cast<std::size_t>(b.size()));
    const RVec col_sums = b.colwise().sum().transpose();
    h_y += kernels::entropy_bits(col_sums.data(),
                                 static_cast<std::size_t>(col_sums.size()));
  }
  return h_joint - h_y;
}

std::vector<RMat> overlap_blocks(const SpinRotation& relative) {
  std::vector<RMat> out(static_cast<std::size_t>(relative.max_sector()) + 1);
  for (int n = 0; n <= relative.max_sector(); ++n) {
    const Mat r = relative.sector(n);
    RMat c(r.cols(), r.rows());
    for (Index x = 0; x < r.cols(); ++x)
      for (Index z = 0; z < r.rows(); ++z) c(x, z) = clamp_overlap(std::norm(r(z, x)));
    out[static_cast<std::size_t>(n)] = std::move(c);
  }
  return out;
}

double q_mu_split(const std::vector<RMat>& c_blocks) {
  double cmax = 0.0;
  for (const RMat& c : c_blocks) cmax = std::max(cmax, c.maxCoeff());
  return -std::log2(cmax);
}

double q_pn_split(const std::vector<RMat>& c_blocks, const RVec& p_n) {
  require(static_cast<Index>(c_blocks.size()) == p_n.size(),
          "q_pn_split: label mismatch");
  RVec maxima(p_n.size());
  for (Index n = 0; n < p_n.size(); ++n)
    maxima(n) = c_blocks[static_cast<std::size_t>(n)].maxCoeff();
  return q_pn(maxima, p_n);
}

double q_c_split(const std::vector<RMat>& c_blocks, const SectorDistribution& p_xy,
                 bool swap_xz) {
  double q = 0.0;
  for (std::size_t n = 0; n < p_xy.blocks.size(); ++n) {
    const RMat& c = c_blocks[n];
    const RVec row_max = swap_xz ? RVec(c.colwise().maxCoeff().transpose())
                                 : RVec(c.rowwise().maxCoeff());
    const RVec p_x = p_xy.blocks[n].rowwise().sum();
    q += kernels::neg_weighted_log2(p_x.data(), row_max.data(),
                                    static_cast<std::size_t>(p_x.size()), DBL_MIN);
  }
  return q;
}

double q_fsd_split(const std::vector<RMat>& c_blocks, const SectorDistribution& p_xy,
                   const SectorDistribution& p_zy, bool swap_xz) {
  double q = 0.0;
  for (std::size_t n = 0; n < p_xy.blocks.size(); ++n) {
    RMat cond = p_zy.blocks[n];
    RMat weights = p_xy.blocks[n];
    const RVec marg = cond.colwise().sum().transpose();
    for (Index y = 0; y < cond.cols(); ++y) {
      if (marg(y) < tol::marginal_cutoff) {
        cond.col(y).setZero();
        weights.col(y).setZero();
      } else {
        cond.col(y) /= marg(y);
      }
    }
    const RMat inner =
        swap_xz ? RMat(c_blocks[n].transpose() * cond) : RMat(c_blocks[n] * cond);
    q += kernels::neg_weighted_log2(weights.data(), inner.data(),
                                    static_cast<std::size_t>(inner.size()), DBL_MIN);
  }
  return q;
}

SplitDecomposition decompose(const SectorBlockedState& state) {
  SplitDecomposition out;
  out.weights = state.sector_weights();
  out.number_entropy = kernels::entropy_bits(
      out.weights.data(), static_cast<std::size_t>(out.weights.size()));
  double configurational = 0.0;
  for (std::size_t n = 0; n < state.blocks.size(); ++n) {
    const double w = out.weights(static_cast<Index>(n));
    if (w < tol::marginal_cutoff) continue;
    Eigen::BDCSVD<Mat> svd(state.blocks[n]);
    RVec spectrum = svd.singularValues().cwiseAbs2() / w;
    configurational += w * kernels::entropy_bits(
                               spectrum.data(), static_cast<std::size_t>(spectrum.size()));
  }
  out.configurational = configurational;
  return out;
}

PureStateVector embed_full(const SectorBlockedState& state) {
  const int n_total = state.total;
  std::vector<FockBasis> local;
  std::vector<Index> offset;  // start of sector n inside the local space
  Index local_dim = 0;
  for (int n = 0; n <= n_total; ++n) {
    local.push_back(FockBasis::make(n));
    offset.push_back(local_dim);
    local_dim += local.back().size();
  }
  Vec amps = Vec::Zero(local_dim * local_dim);
  for (int n = 0; n <= n_total; ++n) {
    const Mat& b = state.blocks[static_cast<std::size_t>(n)];
    for (Index i = 0; i < b.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j)
        amps((offset[static_cast<std::size_t>(n)] + i) * local_dim +
             offset[static_cast<std::size_t>(n_total - n)] + j) = b(i, j);
  }
  return PureStateVector{std::move(amps), DimList{local_dim, local_dim}};
}

Spin1Point evaluate_point(const SectorBlockedState& state, const SpinRotation& fourier,
                          const Eigen::Vector3d& phases) {
  const int n_total = state.total;
  require(fourier.max_sector() >= n_total, "evaluate_point: rotation cache too small");
  const SpinRotation diag = SpinRotation::diagonal_phases(phases, n_total);

  SectorDistribution p_xx, p_zz, p_zx, p_xz;
  for (auto* p : {&p_xx, &p_zz, &p_zx, &p_xz}) {
    p->total = n_total;
    p->blocks.resize(static_cast<std::size_t>(n_total) + 1);
  }
  for (int n = 0; n <= n_total; ++n) {
    const std::size_t sn = static_cast<std::size_t>(n);
    const int nb = n_total - n;
    const Mat& raw = state.blocks[sn];
    auto squared = [](const Mat& m) {
      RMat p(m.rows(), m.cols());
      kernels::squared_modulus(m.data(), p.data(), static_cast<std::size_t>(m.size()));
      return p;
    };
    // X = D(phi) bare measurement (phases cancel in its probabilities),
    // Z = F3 D(phi)
    const Mat za = fourier.apply_left(diag.apply_left(raw, n), n);
    const Mat zb_raw = fourier.apply_right(diag.apply_right(raw, nb), nb);
    const Mat zz = fourier.apply_right(diag.apply_right(za, nb), nb);
    p_xx.blocks[sn] = squared(raw);
    p_zx.blocks[sn] = squared(za);
    p_xz.blocks[sn] = squared(zb_raw);
    p_zz.blocks[sn] = squared(zz);
  }

  Spin1Point out;
  out.h_xx = conditional_a_given_b(p_xx);
  out.h_zz = conditional_a_given_b(p_zz);

  // both measurements differ by the fixed Fourier rotation
  const std::vector<RMat> c_blocks = overlap_blocks(fourier);
  out.q_mu = q_mu_split(c_blocks);
  out.q_pn = q_pn_split(c_blocks, state.sector_weights());
  out.q_c = std::max(q_c_split(c_blocks, p_xx, false), q_c_split(c_blocks, p_zz, true));
  out.q_fsd = std::max(q_fsd_split(c_blocks, p_xx, p_zx, false),
                       q_fsd_split(c_blocks, p_zz, p_xz, true));

  const double measured = out.h_xx + out.h_zz;
  out.bound_mu = out.q_mu - measured;
  out.bound_pn = out.q_pn - measured;
  out.bound_c = out.q_c - measured;
  out.bound_fsd = out.q_fsd - measured;

  const SplitDecomposition d = decompose(state);
  out.number_entropy = d.number_entropy;
  out.configurational = d.configurational;
  return out;
}

namespace {

// Nelder-Mead on the two free phases; the third is fixed by sum = 0.
struct Simplex2Result {
  Eigen::Vector2d best = Eigen::Vector2d::Zero();
  double value = 0.0;
  bool converged = false;
};

template <typename Fn>
Simplex2Result nelder_mead_2d(Fn&& f, const Eigen::Vector2d& start, double scale,
                              int max_iter, double tol_size) {
  std::array<Eigen::Vector2d, 3> pts{start, start + Eigen::Vector2d(scale, 0.0),
                                     start + Eigen::Vector2d(0.0, scale)};
  std::array<double, 3> val{f(pts[0]), f(pts[1]), f(pts[2])};

  auto order = [&] {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2 - i; ++j)
        if (val[j + 1] < val[j]) {
          std::swap(val[j], val[j + 1]);
          std::swap(pts[j], pts[j + 1]);
        }
  };
  order();
  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    if ((pts[0] - pts[2]).norm() + (pts[0] - pts[1]).norm() < tol_size) {
      converged = true;
      break;
    }
    const Eigen::Vector2d centroid = 0.5 * (pts[0] + pts[1]);
    const Eigen::Vector2d reflected = centroid + (centroid - pts[2]);
    const double fr = f(reflected);
    if (fr < val[0]) {
      const Eigen::Vector2d expanded = centroid + 2.0 * (centroid - pts[2]);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[2] = expanded;
        val[2] = fe;
      } else {
        pts[2] = reflected;
        val[2] = fr;
      }
    } else if (fr < val[1]) {
      pts[2] = reflected;
      val[2] = fr;
    } else {
      const Eigen::Vector2d contracted = centroid + 0.5 * (pts[2] - centroid);
      const double fc = f(contracted);
      if (fc < val[2]) {
        pts[2] = contracted;
        val[2] = fc;
      } else {
        pts[1] = pts[0] + 0.5 * (pts[1] - pts[0]);
        pts[2] = pts[0] + 0.5 * (pts[2] - pts[0]);
        val[1] = f(pts[1]);
        val[2] = f(pts[2]);
      }
    }
    order();
  }
  return {pts[0], val[0], converged};
}

}  // namespace

OptimizeResult optimize_phases(const SectorBlockedState& state,
                               const SpinRotation& fourier, Objective objective,
                               int restarts, std::uint64_t seed) {
  require(restarts >= 1, "optimize_phases: restarts < 1");
  auto score = [&](const Eigen::Vector2d& p) {
    const Eigen::Vector3d phi(p(0), p(1), -p(0) - p(1));
    const Spin1Point pt = evaluate_point(state, fourier, phi);
    return objective == Objective::EntropySum ? pt.h_xx + pt.h_zz : -pt.bound_fsd;
  };

  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  OptimizeResult out;
  out.restarts = restarts;
  double best = std::numeric_limits<double>::infinity();
  bool any_converged = false;
  for (int r = 0; r < restarts; ++r) {
    const Eigen::Vector2d start =
        r == 0 ? Eigen::Vector2d::Zero() : Eigen::Vector2d(angle(gen), angle(gen));
    const Simplex2Result res = nelder_mead_2d(score, start, 0.4, 250, 1e-9);
    any_converged |= res.converged;
    if (res.value < best) {
      best = res.value;
      out.phases =
          Eigen::Vector3d(res.best(0), res.best(1), -res.best(0) - res.best(1));
    }
  }
  out.objective = best;
  out.converged = any_converged;
  out.point = evaluate_point(state, fourier, out.phases);
  return out;
}

std::vector<Spin1Point> squeezed_sweep(int n, const std::vector<double>& r_values,
                                       const Eigen::Vector3d& phases, int threads) {
  const FockBasis basis = FockBasis::make(n);
  // q = -g(N - 1/2) cancels the quadratic term at high zero-mode occupation
  const double g = 1.0;
  const Evolution evo(spin_mixing_hamiltonian(basis, g, -g * (n - 0.5)));
  const Vec psi0 = polar_state(basis);
  const SpinRotation fourier(fourier3(), n, threads);

  std::vector<Spin1Point> out(r_values.size());
  parallel_for(r_values.size(), threads, [&](std::size_t i) {
    const double r = r_values[i];
    const Vec psi = evo.at(psi0, r / (g * n));  // r = N g t
    out[i] = evaluate_point(beamsplit(psi, basis), fourier, phases);
    out[i].r_or_q = r;
  });
  return out;
}

Vec pair_subspace_ground_state(const FockBasis& basis, double g, double q) {
  const int n = basis.total;
  const int k_max = n / 2;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k_max + 1, k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    const double transverse = 2.0 * k;
    h(k, k) = g * (n - 2.0 * k - 0.5) * transverse + q * transverse;
    if (k + 1 <= k_max) {
      const double amp = g * (k + 1) *
                         std::sqrt(static_cast<double>(n - 2 * k) *
                                   static_cast<double>(n - 2 * k - 1));
      h(k + 1, k) = amp;
      h(k, k + 1) = amp;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::VectorXd v = es.eigenvectors().col(0);
  Index peak = 0;
  v.cwiseAbs().maxCoeff(&peak);
  if (v(peak) < 0.0) v = -v;

  Vec psi = Vec::Zero(basis.size());
  for (int k = 0; k <= k_max; ++k) psi(basis.index({k, n - 2 * k, k})) = v(k);
  psi /= psi.norm();
  return psi;
}

std::vector<Spin1Point> ground_sweep(int n, double g,
                                     const std::vector<double>& q_over_qc,
                                     int threads) {
  require(g < 0.0, "ground_sweep: ferromagnetic condensates need g < 0");
  const FockBasis basis = FockBasis::make(n);
  const double q_c = 2.0 * n * std::abs(g);
  const SpinRotation fourier(fourier3(), n, threads);

  std::vector<Spin1Point> out(q_over_qc.size());
  parallel_for(q_over_qc.size(), threads, [&](std::size_t i) {
    const Vec psi = pair_subspace_ground_state(basis, g, q_over_qc[i] * q_c);
    out[i] = evaluate_point(beamsplit(psi, basis), fourier, Eigen::Vector3d::Zero());
    out[i].r_or_q = q_over_qc[i];
  });
  return out;
}

double fourier_optimality_probe(int samples, std::uint64_t seed) {
  double best = 1.0;
  for (int s = 0; s < samples; ++s) {
    const Mat u = random_unitary(3, seed + static_cast<std::uint64_t>(s));
    best = std::min(best, u.cwiseAbs2().maxCoeff());
  }
  return best;
}

Table fig67_table(int n_small, int n_large, int r_points, double r_max,
                  const Eigen::Vector3d& phases, int threads) {
  Table t;
  t.columns = {"n",        "r",        "p_number_entropy", "configurational_negHAB",
               "bound_mu", "bound_pn", "bound_c",          "bound_fsd"};
  std::vector<double> grid;
  for (int i = 0; i < r_points; ++i)
    grid.push_back(r_max * static_cast<double>(i) / (r_points - 1));
  for (int n : {n_small, n_large}) {
    if (n <= 0) continue;
    for (const Spin1Point& p : squeezed_sweep(n, grid, phases, threads))
      t.rows.push_back({static_cast<double>(n), p.r_or_q, p.number_entropy,
                        p.configurational, p.bound_mu, p.bound_pn, p.bound_c,
                        p.bound_fsd});
  }
  return t;
}

Table fig8_table(int n, double g, int q_points, double q_range, int threads) {
  Table t;
  t.columns = {"q_over_qc", "neg_HAB_configurational", "bound_pn", "bound_c",
               "bound_fsd", "bound_mu",                "p_number_entropy"};
  std::vector<double> grid;
  for (int i = 0; i < q_points; ++i)
    grid.push_back(-q_range + 2.0 * q_range * static_cast<double>(i) / (q_points - 1));
  for (const Spin1Point& p : ground_sweep(n, g, grid, threads))
    t.rows.push_back({p.r_or_q, p.configurational, p.bound_pn, p.bound_c, p.bound_fsd,
                      p.bound_mu, p.number_entropy});
  return t;
}

}  // namespace eub::spin1
