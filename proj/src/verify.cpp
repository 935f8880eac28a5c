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

#include "eub/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "eub/parallel.hpp"

namespace eub {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double gauss() { return normal_(gen_); }
  double uniform() { return uniform_(gen_); }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

Mat gaussian_matrix(Index rows, Index cols, Rng& rng) {
  Mat g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = Complex(rng.gauss(), rng.gauss());
  return g;
}

Mat haar_unitary(Index d, Rng& rng) {
  const Mat g = gaussian_matrix(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    q.col(i) *= std::abs(rii) > 0.0 ? rii / std::abs(rii) : Complex(1.0);
  }
  return q;
}

DensityOperator gaussian_density(Index d, Index rank, Rng& rng, DimList dims) {
  const Mat g = gaussian_matrix(d, rank, rng);
  Mat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator{std::move(m), std::move(dims)};
}

Measurement gaussian_povm(Index d, int k, Rng& rng) {
  std::vector<Mat> raw(static_cast<std::size_t>(k));
  Mat total = Mat::Zero(d, d);
  for (auto& e : raw) {
    const Mat g = gaussian_matrix(d, d, rng);
    e = g * g.adjoint();
    total += e;
  }
  const Mat t = matrix_inv_sqrt(total);
  for (auto& e : raw) e = t * e * t;
  return Measurement::povm(std::move(raw));
}

// H(M_A|B) for a measurement of either kind on subsystem 0 of a bipartite
// state.
double h_measured_given_b(const DensityOperator& rho_ab, const Measurement& m) {
  const DensityOperator post = post_measure(rho_ab, m, 0);
  if (m.kind == Measurement::Kind::Basis) return conditional_quantum(post);
  const int target[] = {0};
  const int cond[] = {2};
  return conditional_quantum_general(post, target, cond);
}

double h_classical(const DensityOperator& rho_ab, const Measurement& ma,
                   const Measurement& mb) {
  return conditional_classical(joint_distribution(rho_ab, ma, mb));
}

// ---- per-relation trial slacks -------------------------------------------

double trial_maassen_uffink(Index da, Index, Rng& rng, std::uint64_t seed) {
  const Index rank = 1 + rng.uniform_int(0, static_cast<int>(da) - 1);
  const DensityOperator rho = gaussian_density(da, rank, rng, {da});
  const Measurement x = Measurement::basis(haar_unitary(da, rng));
  const Measurement z = Measurement::basis(haar_unitary(da, rng));
  (void)seed;
  RVec px(da), pz(da);
  for (Index k = 0; k < da; ++k) {
    px(k) = std::max(0.0, (x.unitary.col(k).adjoint() * rho.mat * x.unitary.col(k))(0).real());
    pz(k) = std::max(0.0, (z.unitary.col(k).adjoint() * rho.mat * z.unitary.col(k))(0).real());
  }
  const double lhs = shannon(px) + shannon(pz);
  return lhs - q_mu(overlap_matrix(x, z)) - von_neumann(rho);
}

double trial_berta(Index da, Index db, Rng& rng, std::uint64_t) {
  const Index d = da * db;
  const Index rank = 1 + rng.uniform_int(0, static_cast<int>(d) - 1);
  const DensityOperator rho = gaussian_density(d, rank, rng, {da, db});
  const Measurement x = Measurement::basis(haar_unitary(da, rng));
  const Measurement z = Measurement::basis(haar_unitary(da, rng));
  const double lhs = h_measured_given_b(rho, x) + h_measured_given_b(rho, z);
  return lhs - q_mu(overlap_matrix(x, z)) - conditional_quantum(rho);
}

double trial_frank_lieb(Index da, Index db, Rng& rng, std::uint64_t) {
  const Index d = da * db;
  const Index rank = 1 + rng.uniform_int(0, static_cast<int>(d) - 1);
  const DensityOperator rho = gaussian_density(d, rank, rng, {da, db});
  const Measurement x = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const Measurement z = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const double lhs = h_measured_given_b(rho, x) + h_measured_given_b(rho, z);
  return lhs - q_fl(x, z) - conditional_quantum(rho);
}

double trial_coles_tomamichel(Index da, Index db, Rng& rng, std::uint64_t) {
  const Index d = da * db;
  const Index rank = 1 + rng.uniform_int(0, static_cast<int>(d) - 1);
  const DensityOperator rho = gaussian_density(d, rank, rng, {da, db});
  const Measurement x = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const Measurement z = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const double lhs = h_measured_given_b(rho, x) + h_measured_given_b(rho, z);
  const double rhs =
      q_ct(x, z) + conditional_quantum(rho) - residual_conditional(rho, x);
  return lhs - rhs;
}

double trial_fsd(Index da, Index db, Rng& rng, std::uint64_t) {
  const Index d = da * db;
  const Index rank = 1 + rng.uniform_int(0, static_cast<int>(d) - 1);
  const DensityOperator rho = gaussian_density(d, rank, rng, {da, db});
  const Measurement x = Measurement::basis(haar_unitary(da, rng));
  const Measurement z = Measurement::basis(haar_unitary(da, rng));
  const Measurement y = Measurement::basis(haar_unitary(db, rng));
  const double lhs = h_classical(rho, x, y) + h_measured_given_b(rho, z);
  const double q = q_fsd(overlap_matrix(x, z), joint_distribution(rho, x, y),
                         joint_distribution(rho, z, y));
  return lhs - conditional_quantum(rho) - q;
}

double trial_tripartite(Index da, Index db, Rng& rng, std::uint64_t) {
  const Index d = da * db;
  const Index rank = 2 + rng.uniform_int(0, static_cast<int>(d) - 2);
  const DensityOperator rho = gaussian_density(d, rank, rng, {da, db});
  const PureStateVector pure = purify(rho);
  const Index dc = pure.dims[1];
  const DensityOperator rho_abc =
      DensityOperator{pure.amps * pure.amps.adjoint(), DimList{da, db, dc}};

  const Measurement x = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const Measurement z = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const Measurement y = gaussian_povm(db, rng.uniform_int(2, 4), rng);

  const DensityOperator post = post_measure(rho_abc, z, 0);  // dims {K, dA, dB, dC}
  const int target[] = {0};
  const int cond[] = {3};
  const double h_z_given_c = conditional_quantum_general(post, target, cond);
  const double lhs = h_classical(rho, x, y) + h_z_given_c;
  const double q = q_fsdp(povm_overlap_h(x, z), joint_distribution(rho, x, y),
                          joint_distribution(rho, z, y));
  return lhs - q;
}

double trial_fsdp(Index da, Index db, Rng& rng, std::uint64_t) {
  const Index d = da * db;
  const Index rank = 1 + rng.uniform_int(0, static_cast<int>(d) - 1);
  const DensityOperator rho = gaussian_density(d, rank, rng, {da, db});
  const Measurement x = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const Measurement z = gaussian_povm(da, rng.uniform_int(2, 4), rng);
  const Measurement y = gaussian_povm(db, rng.uniform_int(2, 4), rng);
  const double lhs = h_classical(rho, x, y) + h_measured_given_b(rho, z);
  const double q = q_fsdp(povm_overlap_h(x, z), joint_distribution(rho, x, y),
                          joint_distribution(rho, z, y));
  const double rhs = conditional_quantum(rho) - residual_conditional(rho, z) + q;
  return lhs - rhs;
}

double trial_witness(Index da, Index db, Rng& rng, std::uint64_t) {
  const DensityOperator rho = random_separable(da, db, rng.uniform_int(1, 4), rng.raw());
  const Measurement z = gaussian_povm(da, rng.uniform_int(1, 4), rng);
  return witness_povm(rho, z);
}

// Random partition of d into at least two blocks (d >= 2).
std::vector<Index> random_partition(Index d, Rng& rng) {
  std::vector<Index> sizes;
  Index left = d;
  while (left > 0) {
    Index s = 1 + rng.uniform_int(0, static_cast<int>(left) - 1);
    if (sizes.empty() && s == d) s = d - 1;  // force >= 2 blocks
    sizes.push_back(s);
    left -= s;
  }
  return sizes;
}

struct BlockStructure {
  Mat eigenbasis;             // columns grouped by block
  std::vector<Index> sizes;   // block sizes
  std::vector<Index> offsets;
  std::vector<Mat> projectors;
};

BlockStructure random_block_structure(Index d, Rng& rng) {
  BlockStructure bs;
  bs.eigenbasis = haar_unitary(d, rng);
  bs.sizes = random_partition(d, rng);
  Index off = 0;
  for (Index s : bs.sizes) {
    bs.offsets.push_back(off);
    const Mat cols = bs.eigenbasis.middleCols(off, s);
    bs.projectors.push_back(cols * cols.adjoint());
    off += s;
  }
  return bs;
}

// Basis measurement whose projectors commute with the block structure.
Measurement block_diagonal_basis(const BlockStructure& bs, Rng& rng) {
  Mat u = Mat::Zero(bs.eigenbasis.rows(), bs.eigenbasis.cols());
  for (std::size_t b = 0; b < bs.sizes.size(); ++b)
    u.middleCols(bs.offsets[b], bs.sizes[b]) =
        bs.eigenbasis.middleCols(bs.offsets[b], bs.sizes[b]) *
        haar_unitary(bs.sizes[b], rng);
  return Measurement::basis(std::move(u));
}

// POVM with elements commuting with the block structure: a random POVM in
// each block, direct-summed outcome by outcome.
Measurement block_diagonal_povm(const BlockStructure& bs, int k, Rng& rng) {
  const Index d = bs.eigenbasis.rows();
  std::vector<Mat> elements(static_cast<std::size_t>(k), Mat::Zero(d, d));
  for (std::size_t b = 0; b < bs.sizes.size(); ++b) {
    const Measurement inner = gaussian_povm(bs.sizes[b], k, rng);
    const Mat cols = bs.eigenbasis.middleCols(bs.offsets[b], bs.sizes[b]);
    for (int e = 0; e < k; ++e)
      elements[static_cast<std::size_t>(e)] +=
          cols * inner.elements[static_cast<std::size_t>(e)] * cols.adjoint();
  }
  return Measurement::povm(std::move(elements));
}

double trial_conserved(Index da, Index db, Rng& rng, std::uint64_t seed) {
  const Index d = da * db;
  const Index rank = 1 + rng.uniform_int(0, static_cast<int>(d) - 1);
  const DensityOperator rho = gaussian_density(d, rank, rng, {da, db});

  const BlockStructure ba = random_block_structure(da, rng);
  const BlockStructure bb = random_block_structure(db, rng);
  std::vector<ConservedQuantity::Sector> sectors;
  for (std::size_t i = 0; i < ba.projectors.size(); ++i)
    for (std::size_t j = 0; j < bb.projectors.size(); ++j)
      sectors.push_back({static_cast<int>(i), static_cast<int>(j), ba.projectors[i],
                         bb.projectors[j]});
  const ConservedQuantity n = ConservedQuantity::checked(std::move(sectors), da, db);
  const DensityOperator rho_bar = project_conserved(rho, n);

  const bool povm_variant = (seed % 2) == 1;
  if (!povm_variant) {
    const Measurement x = block_diagonal_basis(ba, rng);
    const Measurement z = block_diagonal_basis(ba, rng);
    const Measurement xp = block_diagonal_basis(bb, rng);
    const Measurement zp = block_diagonal_basis(bb, rng);
    const double lhs = h_classical(rho, x, xp) + h_classical(rho, z, zp);
    const double q = q_fsd(overlap_matrix(x, z), joint_distribution(rho, x, xp),
                           joint_distribution(rho, z, xp));
    return lhs - q - conditional_quantum(rho_bar);
  }
  const Measurement x = block_diagonal_povm(ba, rng.uniform_int(2, 3), rng);
  const Measurement z = block_diagonal_povm(ba, rng.uniform_int(2, 3), rng);
  const Measurement xp = block_diagonal_povm(bb, rng.uniform_int(2, 3), rng);
  const Measurement zp = block_diagonal_povm(bb, rng.uniform_int(2, 3), rng);
  const double lhs = h_classical(rho, x, xp) + h_classical(rho, z, zp);
  const double q = q_fsdp(povm_overlap_h(x, z), joint_distribution(rho, x, xp),
                          joint_distribution(rho, z, xp));
  const double rhs =
      q + conditional_quantum(rho_bar) - residual_conditional(rho_bar, z);
  return lhs - rhs;
}

using TrialFn = double (*)(Index, Index, Rng&, std::uint64_t);

TrialFn trial_function(Relation r) {
  switch (r) {
    case Relation::MaassenUffink: return &trial_maassen_uffink;
    case Relation::Berta: return &trial_berta;
    case Relation::FrankLieb: return &trial_frank_lieb;
    case Relation::ColesTomamichel: return &trial_coles_tomamichel;
    case Relation::Fsd: return &trial_fsd;
    case Relation::Tripartite: return &trial_tripartite;
    case Relation::Fsdp: return &trial_fsdp;
    case Relation::Witness: return &trial_witness;
    case Relation::Conserved: return &trial_conserved;
  }
  throw std::invalid_argument("unknown relation");
}

}  // namespace

Mat random_unitary(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(d, rng);
}

DensityOperator random_density(Index d, Index rank, std::uint64_t seed) {
  if (rank < 1 || rank > d) throw std::invalid_argument("random_density: bad rank");
  Rng rng(seed);
  return gaussian_density(d, rank, rng, {d});
}

DensityOperator random_density_bipartite(Index da, Index db, Index rank,
                                         std::uint64_t seed) {
  Rng rng(seed);
  return gaussian_density(da * db, rank, rng, {da, db});
}

DensityOperator random_separable(Index da, Index db, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_separable: k < 1");
  Rng rng(seed);
  RVec weights(k);
  for (int i = 0; i < k; ++i) weights(i) = -std::log(1.0 - rng.uniform());
  weights /= weights.sum();
  Mat m = Mat::Zero(da * db, da * db);
  for (int i = 0; i < k; ++i) {
    const DensityOperator a =
        gaussian_density(da, 1 + rng.uniform_int(0, static_cast<int>(da) - 1), rng, {da});
    const DensityOperator b =
        gaussian_density(db, 1 + rng.uniform_int(0, static_cast<int>(db) - 1), rng, {db});
    m += weights(i) * tensor_product(a.mat, b.mat);
  }
  return DensityOperator{std::move(m), DimList{da, db}};
}

PureStateVector random_pure(DimList dims, std::uint64_t seed) {
  Rng rng(seed);
  const Index d = dim_product(dims);
  Vec amps(d);
  for (Index i = 0; i < d; ++i) amps(i) = Complex(rng.gauss(), rng.gauss());
  amps /= amps.norm();
  return PureStateVector{std::move(amps), std::move(dims)};
}

Measurement random_povm(Index d, int k, std::uint64_t seed) {
  Rng rng(seed);
  return gaussian_povm(d, k, rng);
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::MaassenUffink: return "mu";
    case Relation::Berta: return "berta";
    case Relation::FrankLieb: return "fl";
    case Relation::ColesTomamichel: return "ct";
    case Relation::Fsd: return "fsd";
    case Relation::Tripartite: return "tri";
    case Relation::Fsdp: return "fsdp";
    case Relation::Witness: return "witness";
    case Relation::Conserved: return "conserved";
  }
  return "?";
}

bool relation_from_name(const std::string& name, Relation* out) {
  static constexpr Relation all[] = {
      Relation::MaassenUffink, Relation::Berta,   Relation::FrankLieb,
      Relation::ColesTomamichel, Relation::Fsd,   Relation::Tripartite,
      Relation::Fsdp,          Relation::Witness, Relation::Conserved};
  for (Relation r : all) {
    if (name == relation_name(r)) {
      *out = r;
      return true;
    }
  }
  return false;
}

AuditReport audit_relation(Relation relation, Index da, Index db, int trials,
                           std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("audit_relation: trials < 1");
  TrialFn fn = trial_function(relation);
  std::vector<double> slack(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    Rng rng(s);
    slack[i] = fn(da, db, rng, s);
  });

  AuditReport report;
  report.relation = relation;
  report.dim_a = da;
  report.dim_b = db;
  report.trials = trials;
  report.seed = seed;
  report.min_slack = slack[0];
  report.argmin_seed = seed;
  for (std::size_t i = 0; i < slack.size(); ++i) {
    if (slack[i] < report.min_slack) {
      report.min_slack = slack[i];
      report.argmin_seed = seed + static_cast<std::uint64_t>(i);
    }
    if (slack[i] < -tol::audit_slack) ++report.violations;
  }
  return report;
}

double duality_residual(const DensityOperator& rho_ab, const Measurement& z) {
  if (rho_ab.dims.size() != 2)
    throw std::invalid_argument("duality_residual: state is not bipartite");
  const Index da = rho_ab.dims[0], db = rho_ab.dims[1];
  const PureStateVector pure = purify(rho_ab);
  const Index dc = pure.dims[1];
  const DensityOperator rho_abc =
      DensityOperator{pure.amps * pure.amps.adjoint(), DimList{da, db, dc}};
  const DensityOperator post = post_measure(rho_abc, z, 0);  // {K, dA, dB, dC}
  const int target[] = {0};
  const int cond_c[] = {3};
  const int cond_b[] = {2};
  const double h_z_given_c = conditional_quantum_general(post, target, cond_c);
  const double h_z_given_b = conditional_quantum_general(post, target, cond_b);
  const double lhs = h_z_given_c;
  const double rhs = h_z_given_b -
                     (conditional_quantum(rho_ab) - residual_conditional(rho_ab, z));
  return std::abs(lhs - rhs);
}

double petz_residual(const DensityOperator& rho_ab, const Measurement& x,
                     const Measurement& z) {
  if (rho_ab.dims.size() != 2)
    throw std::invalid_argument("petz_residual: state is not bipartite");
  const Index da = rho_ab.dims[0];
  const DensityOperator rho_xb = post_measure(rho_ab, x, 0);
  const DensityOperator rho_zb = post_measure(rho_ab, z, 0);
  const Mat b_inv_sqrt =
      tensor_product(Mat::Identity(da, da),
                     matrix_inv_sqrt(partial_trace(rho_zb, 1).mat, kPovmSqrtCutoff));
  const Mat root_zb = matrix_sqrt(rho_zb.mat, kPovmSqrtCutoff);
  const Mat rebuilt = static_cast<double>(da) * root_zb * b_inv_sqrt * rho_xb.mat *
                      b_inv_sqrt * root_zb;
  return hermitian_eigenvalues(rho_ab.mat - rebuilt).cwiseAbs().maxCoeff();
}

namespace {

// Completes (and orthonormalizes) the given columns to a full orthonormal
// basis, filling up with random directions.
Mat complete_onb(const Mat& cols, Index d, Rng& rng) {
  Mat out(d, d);
  Index have = 0;
  auto push = [&](Vec v) {
    for (Index k = 0; k < have; ++k) v -= out.col(k).dot(v) * out.col(k);
    const double norm = v.norm();
    if (norm < 1e-8) return;
    out.col(have++) = v / norm;
  };
  for (Index c = 0; c < cols.cols() && have < d; ++c) push(cols.col(c));
  while (have < d) {
    Vec v(d);
    for (Index i = 0; i < d; ++i) v(i) = Complex(rng.gauss(), rng.gauss());
    push(std::move(v));
  }
  return out;
}

}  // namespace

TightnessScan tightness_scan(const PureStateVector& psi, int trials,
                             std::uint64_t seed, int threads) {
  if (psi.dims.size() != 2)
    throw std::invalid_argument("tightness_scan: state is not bipartite");
  const Index da = psi.dims[0], db = psi.dims[1];
  const SchmidtDecomposition sd = schmidt(psi);
  const DensityOperator rho = psi.density();
  const double h_ab = conditional_quantum(rho);
  const Mat fourier = fourier_matrix(da);

  std::vector<double> gaps(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    Rng rng(s);

    auto gap_for = [&](const Mat& ux, const Mat& uxp, const Mat& uzp) {
      const Mat uz = ux * fourier;
      const double lhs =
          conditional_classical(
              joint_distribution(rho, Measurement::basis(ux), Measurement::basis(uxp))) +
          conditional_classical(
              joint_distribution(rho, Measurement::basis(uz), Measurement::basis(uzp)));
      return lhs - h_ab - std::log2(static_cast<double>(da));
    };

    // B-side measurement matched to the A-side basis through the Schmidt
    // frames; exact for maximally entangled states.
    auto matched = [&](const Mat& u_a) {
      const Mat raw = sd.right_vectors * (sd.left_vectors.adjoint() * u_a).conjugate();
      return complete_onb(raw, db, rng);
    };

    const Mat v = haar_unitary(da, rng);
    const Mat anchored = complete_onb(sd.left_vectors, da, rng);
    double g = gap_for(v, haar_unitary(db, rng), haar_unitary(db, rng));
    g = std::min(g, gap_for(v, matched(v), matched(v * fourier)));
    g = std::min(g, gap_for(anchored, matched(anchored), matched(anchored * fourier)));
    gaps[i] = g;
  });

  TightnessScan out;
  out.min_gap = gaps[0];
  out.argmin_seed = seed;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < out.min_gap) {
      out.min_gap = gaps[i];
      out.argmin_seed = seed + static_cast<std::uint64_t>(i);
    }
  }
  return out;
}

double schmidt_identity_residual(const PureStateVector& psi, const Mat& u) {
  if (psi.dims.size() != 2 || psi.dims[0] != psi.dims[1])
    throw std::invalid_argument("schmidt_identity_residual: need dA == dB");
  const SchmidtDecomposition sd = schmidt(psi);
  const DensityOperator rho = psi.density();

  const Measurement z_a = Measurement::basis(sd.left_vectors);
  const Measurement z_b = Measurement::basis(sd.right_vectors);
  const Measurement x_a = Measurement::basis(sd.left_vectors * u);
  const Measurement y_b = Measurement::basis(sd.right_vectors * u);

  const JointDistribution p_xy = joint_distribution(rho, x_a, y_b);
  const JointDistribution p_zy = joint_distribution(rho, z_a, y_b);
  const double q = q_fsd(overlap_matrix(x_a, z_a), p_xy, p_zy);
  const double h_xy = conditional_classical(p_xy);
  const double h_zz = conditional_classical(joint_distribution(rho, z_a, z_b));
  const double bound = q - h_xy - h_zz;

  // Dephased classical reference sum_i lambda_i^2 |l_i r_i><l_i r_i|.
  Mat dephased = Mat::Zero(rho.dim(), rho.dim());
  for (Index k = 0; k < sd.coefficients.size(); ++k) {
    const Vec v = tensor_product_vec(sd.left_vectors.col(k), sd.right_vectors.col(k));
    dephased += std::norm(sd.coefficients(k)) * (v * v.adjoint()).eval();
  }
  const JointDistribution p_xy_deph =
      joint_distribution(DensityOperator{std::move(dephased), psi.dims}, x_a, y_b);

  const RVec flat_rho = Eigen::Map<const RVec>(p_xy.table.data(), p_xy.table.size());
  const RVec flat_deph =
      Eigen::Map<const RVec>(p_xy_deph.table.data(), p_xy_deph.table.size());
  const double divergence = relative_classical(flat_rho, flat_deph);
  return std::abs(bound - divergence);
}

}  // namespace eub
