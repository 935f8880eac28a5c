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

#include <cmath>

#include <doctest.h>

#include "eub/bounds.hpp"
#include "eub/verify.hpp"

using namespace eub;

namespace {

Measurement hadamard_basis() {
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  return Measurement::basis(h / std::sqrt(2.0));
}

PureStateVector bell_state() {
  Vec amps(4);
  amps << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return PureStateVector::checked(amps, {2, 2});
}

Measurement coarse_povm_d2() {
  std::vector<Mat> e{0.5 * Mat::Identity(2, 2), 0.5 * Mat::Identity(2, 2)};
  return Measurement::povm(e);
}

Measurement projective_povm(const Measurement& basis) {
  std::vector<Mat> e;
  for (Index k = 0; k < basis.outcomes(); ++k) e.push_back(basis.element(k));
  return Measurement::povm(e);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("q_mu closed forms") {
  const Measurement comp = computational_basis(2);
  CHECK(q_mu(overlap_matrix(comp, comp)) == 0.0);
  CHECK(std::abs(q_mu(overlap_matrix(comp, hadamard_basis())) - 1.0) < 1e-12);
  for (Index d : {2, 3, 5}) {
    const auto c = overlap_matrix(computational_basis(d),
                                  Measurement::basis(fourier_matrix(d)));
    CHECK(std::abs(q_mu(c) - std::log2(static_cast<double>(d))) < 1e-12);
  }
}

TEST_CASE("q_mu stays within [0, log d] for basis pairs") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto x = Measurement::basis(random_unitary(4, 3000 + s));
    const auto z = Measurement::basis(random_unitary(4, 3100 + s));
    const double q = q_mu(overlap_matrix(x, z));
    CHECK(q >= -1e-12);
    CHECK(q <= 2.0 + 1e-12);
  }
}

TEST_CASE("q_fl closed forms") {
  const Measurement comp = projective_povm(computational_basis(2));
  const Measurement had = projective_povm(hadamard_basis());
  CHECK(std::abs(q_fl(comp, had) - 1.0) < 1e-12);

  const Measurement trivial = Measurement::povm({Mat::Identity(2, 2)});
  CHECK(std::abs(q_fl(trivial, trivial) + 1.0) < 1e-12);  // -log2(Tr I) = -1

  CHECK(std::abs(q_fl(comp, comp)) < 1e-12);
}

TEST_CASE("q_ct reduces to q_mu on rank-1 projective pairs") {
  const Measurement comp = projective_povm(computational_basis(2));
  const Measurement had = projective_povm(hadamard_basis());
  CHECK(std::abs(q_ct(comp, comp)) < 1e-12);
  CHECK(std::abs(q_ct(comp, had) - 1.0) < 1e-12);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Measurement xb = Measurement::basis(random_unitary(3, 3200 + s));
    const Measurement zb = Measurement::basis(random_unitary(3, 3300 + s));
    CHECK(std::abs(q_ct(projective_povm(xb), projective_povm(zb)) -
                   q_mu(overlap_matrix(xb, zb))) < 1e-10);
  }

  // X = {I/2, I/2} against projective Z: the channel halves every element
  CHECK(std::abs(q_ct(coarse_povm_d2(), comp) - 1.0) < 1e-12);
}

TEST_CASE("q_c closed forms") {
  for (Index d : {2, 3}) {
    const auto c = overlap_matrix(computational_basis(d),
                                  Measurement::basis(fourier_matrix(d)));
    const RVec p = random_pure({d}, 3400 + d).amps.cwiseAbs2();
    CHECK(std::abs(q_c(c, p) - std::log2(static_cast<double>(d))) < 1e-12);
  }

  OverlapMatrix c;
  c.c.resize(2, 2);
  c.c << 0.5, 0.25, 1.0, 0.0;
  RVec concentrated(2);
  concentrated << 1.0, 0.0;
  CHECK(std::abs(q_c(c, concentrated) - 1.0) < 1e-12);  // -log2(0.5)

  RVec uniform(2);
  uniform << 0.5, 0.5;
  CHECK(std::abs(q_c(c, uniform) - 0.5) < 1e-12);  // rows max (1/2, 1)
}

TEST_CASE("q_c dominates q_mu") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto x = Measurement::basis(random_unitary(3, 3500 + s));
    const auto z = Measurement::basis(random_unitary(3, 3600 + s));
    const auto c = overlap_matrix(x, z);
    const RVec p = random_pure({3}, 3700 + s).amps.cwiseAbs2();
    CHECK(q_mu(c) <= q_c(c, p) + 1e-12);
  }
}

TEST_CASE("q_fsd closed forms") {
  // MUB pair: log d for any distributions
  for (Index d : {2, 3}) {
    const Measurement x = computational_basis(d);
    const Measurement z = Measurement::basis(fourier_matrix(d));
    const Measurement y = Measurement::basis(random_unitary(d, 3800 + d));
    const DensityOperator rho = random_density_bipartite(d, d, 2, 3900 + d);
    const double q = q_fsd(overlap_matrix(x, z), joint_distribution(rho, x, y),
                           joint_distribution(rho, z, y));
    CHECK(std::abs(q - std::log2(static_cast<double>(d))) < 1e-10);
  }

  // c = identity with perfectly correlated joints degenerates to H(X|Y)
  RMat corr(2, 2);
  corr << 0.5, 0.0, 0.0, 0.5;
  const auto p = JointDistribution::checked(corr);
  OverlapMatrix ident;
  ident.c = RMat::Identity(2, 2);
  const double q = q_fsd(ident, p, p);
  CHECK(std::abs(q - conditional_classical(p)) < 1e-12);
  CHECK(std::abs(q) < 1e-12);

  // Bell state, X computational, Z Hadamard, Y computational on B
  const DensityOperator bell = bell_state().density();
  const Measurement comp = computational_basis(2);
  const Measurement had = hadamard_basis();
  const double q_bell =
      q_fsd(overlap_matrix(comp, had), joint_distribution(bell, comp, comp),
            joint_distribution(bell, had, comp));
  CHECK(std::abs(q_bell - 1.0) < 1e-10);
}

TEST_CASE("q_fsd dominates q_c of the X marginal") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityOperator rho = random_density_bipartite(3, 3, 3, 4000 + s);
    const Measurement x = Measurement::basis(random_unitary(3, 4100 + s));
    const Measurement z = Measurement::basis(random_unitary(3, 4200 + s));
    const Measurement y = Measurement::basis(random_unitary(3, 4300 + s));
    const auto c = overlap_matrix(x, z);
    const auto p_xy = joint_distribution(rho, x, y);
    const auto p_zy = joint_distribution(rho, z, y);
    CHECK(q_fsd(c, p_xy, p_zy) >= q_c(c, p_xy.marginal_x()) - 1e-9);
  }
}

TEST_CASE("q_fsdp closed forms") {
  // rank-1 projective inputs reduce to q_fsd
  for (std::uint64_t s = 0; s < 5; ++s) {
    const DensityOperator rho = random_density_bipartite(2, 2, 2, 4400 + s);
    const Measurement xb = Measurement::basis(random_unitary(2, 4500 + s));
    const Measurement zb = Measurement::basis(random_unitary(2, 4600 + s));
    const Measurement y = Measurement::basis(random_unitary(2, 4700 + s));
    const auto p_xy = joint_distribution(rho, xb, y);
    const auto p_zy = joint_distribution(rho, zb, y);
    CHECK(std::abs(q_fsdp(povm_overlap_h(xb, zb), p_xy, p_zy) -
                   q_fsd(overlap_matrix(xb, zb), p_xy, p_zy)) < 1e-9);
  }

  // single-outcome Z: h = 1 and the factor vanishes
  const DensityOperator rho = random_density_bipartite(2, 2, 3, 4800);
  const Measurement comp = computational_basis(2);
  const Measurement trivial = Measurement::povm({Mat::Identity(2, 2)});
  const Measurement y = computational_basis(2);
  CHECK(std::abs(q_fsdp(povm_overlap_h(projective_povm(comp), trivial),
                        joint_distribution(rho, comp, y),
                        joint_distribution(rho, trivial, y))) < 1e-12);

  // X = {I/2, I/2} against a projective Z gives exactly one bit
  const double q = q_fsdp(povm_overlap_h(coarse_povm_d2(), projective_povm(comp)),
                          joint_distribution(rho, coarse_povm_d2(), y),
                          joint_distribution(rho, comp, y));
  CHECK(std::abs(q - 1.0) < 1e-10);
}

TEST_CASE("q_pn closed forms") {
  RVec maxima(2);
  maxima << 1.0, 1.0 / 3.0;  // sectors n = 0 and n = 1 with a Fourier rotation
  RVec p0(2), p1(2), mix(2);
  p0 << 1.0, 0.0;
  p1 << 0.0, 1.0;
  mix << 0.5, 0.5;
  CHECK(q_pn(maxima, p0) == 0.0);
  CHECK(std::abs(q_pn(maxima, p1) - std::log2(3.0)) < 1e-12);
  CHECK(std::abs(q_pn(maxima, mix) - 0.5 * std::log2(3.0)) < 1e-12);
}

TEST_CASE("assemble bound composes and is recomputable") {
  // Bell state with the computational/Hadamard pair is the known tight case
  const DensityOperator bell = bell_state().density();
  const Measurement comp = computational_basis(2);
  const Measurement had = hadamard_basis();
  const double h_xx = conditional_classical(joint_distribution(bell, comp, comp));
  const double h_zz = conditional_classical(joint_distribution(bell, had, had));
  const double exact = -conditional_quantum(bell);
  const auto report = assemble_bound("mu", q_mu(overlap_matrix(comp, had)), h_xx,
                                     h_zz, 0.0, exact);
  CHECK(std::abs(report.bound - 1.0) < 1e-10);
  CHECK(std::abs(report.bound - *report.exact_neg_hab) < 1e-10);
  CHECK(std::abs(report.bound - (report.q - report.h_xx - report.h_zz - report.residual)) <
        1e-12);

  // q = 0 forces a nonpositive bound
  const auto trivial = assemble_bound("mu", 0.0, 0.3, 0.2);
  CHECK(trivial.bound <= 0.0);
}

TEST_CASE("bounds never certify entanglement on separable states") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityOperator rho = random_separable(2, 2, 3, 4900 + s);
    const Measurement x = computational_basis(2);
    const Measurement z = hadamard_basis();
    const double h_xx = conditional_classical(joint_distribution(rho, x, x));
    const double h_zz = conditional_classical(joint_distribution(rho, z, z));
    const auto c = overlap_matrix(x, z);
    const auto p_xx = joint_distribution(rho, x, x);
    const auto p_zx = joint_distribution(rho, z, x);
    for (double q : {q_mu(c), q_c(c, p_xx.marginal_x()), q_fsd(c, p_xx, p_zx)})
      CHECK(assemble_bound("any", q, h_xx, h_zz).bound <= 1e-9);
  }
}

TEST_CASE("witness closed forms") {
  const DensityOperator bell = bell_state().density();
  CHECK(std::abs(witness_povm(bell, coarse_povm_d2())) < 1e-10);

  const Measurement basis = Measurement::basis(random_unitary(2, 5000));
  const Measurement proj = projective_povm(basis);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const DensityOperator rho = random_density_bipartite(2, 2, 2, 5100 + s);
    CHECK(std::abs(witness_povm(rho, proj) - conditional_quantum(rho)) < 1e-9);
  }

  const DensityOperator ra = random_density(2, 2, 5200);
  const DensityOperator rb = random_density(2, 2, 5201);
  const DensityOperator prod{tensor_product(ra.mat, rb.mat), {2, 2}};
  CHECK(witness_povm(prod, random_povm(2, 3, 5202)) >= -1e-9);
}

TEST_CASE("conserved projections") {
  // sectors (0,0) and (1,1) on 2x2: the parity structure of one shared bit
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  std::vector<ConservedQuantity::Sector> sectors{{0, 0, p0, p0}, {0, 1, p0, p1},
                                                 {1, 0, p1, p0}, {1, 1, p1, p1}};
  const auto n = ConservedQuantity::checked(sectors, 2, 2);

  // block-diagonal states are fixed points
  Mat cc = Mat::Zero(4, 4);
  cc(0, 0) = 0.5;
  cc(3, 3) = 0.5;
  const DensityOperator rho_cc{cc, {2, 2}};
  CHECK((project_conserved(rho_cc, n).mat - cc).cwiseAbs().maxCoeff() < 1e-14);

  // cross-sector superpositions become mixtures with |amplitude|^2 weights
  Vec amps(4);
  amps << std::sqrt(0.7), 0, 0, std::sqrt(0.3);
  const DensityOperator rho = PureStateVector::checked(amps, {2, 2}).density();
  const DensityOperator bar = project_conserved(rho, n);
  CHECK(std::abs(bar.mat(0, 0).real() - 0.7) < 1e-12);
  CHECK(std::abs(bar.mat(3, 3).real() - 0.3) < 1e-12);
  CHECK(std::abs(bar.mat(0, 3)) < 1e-14);
  CHECK(std::abs(bar.mat.trace().real() - 1.0) < 1e-12);

  // idempotent
  CHECK((project_conserved(bar, n).mat - bar.mat).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("number decomposition") {
  // particle-number sectors of one particle split across two sites:
  // n_A ∈ {0, 1} with n_B = 1 - n_A
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  std::vector<ConservedQuantity::Sector> sectors{{0, 1, p0, p1}, {1, 0, p1, p0}};
  // complete with the particle-free pairs so the sectors resolve the identity
  sectors.push_back({0, 0, p0, p0});
  sectors.push_back({1, 1, p1, p1});
  const auto n = ConservedQuantity::checked(sectors, 2, 2);

  Vec split(4);
  split << 0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0;  // (|01> + |10>)/sqrt(2)
  const PureStateVector psi = PureStateVector::checked(split, {2, 2});
  const auto d = number_decomposition(psi, n);
  CHECK(std::abs(d.number_entropy - 1.0) < 1e-12);
  CHECK(std::abs(d.configurational) < 1e-12);
  CHECK(std::abs(d.number_entropy + d.configurational + conditional_quantum(psi.density())) <
        1e-9);

  // single-sector states carry only configurational entanglement
  Vec single(4);
  single << 0, 1.0, 0, 0;
  const auto d2 = number_decomposition(PureStateVector::checked(single, {2, 2}), n);
  CHECK(std::abs(d2.number_entropy) < 1e-12);
  CHECK(std::abs(d2.configurational +
                 conditional_quantum(PureStateVector::checked(single, {2, 2}).density())) <
        1e-9);
}

TEST_CASE("decomposition parts sum to the exact value on number-conserving states") {
  // Two modes per side, occupations 0/1 each: local particle number
  // n = n1 + n2 splits the local space |n1 n2> into sectors {0, 1, 2}.
  std::vector<Mat> proj(3, Mat::Zero(4, 4));
  proj[0](0, 0) = 1.0;                      // |00>
  proj[1](1, 1) = proj[1](2, 2) = 1.0;      // |01>, |10>
  proj[2](3, 3) = 1.0;                      // |11>
  std::vector<ConservedQuantity::Sector> sectors;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sectors.push_back({i, j, proj[i], proj[j]});
  const auto n = ConservedQuantity::checked(sectors, 4, 4);

  // random pure states with exactly two particles in total
  for (std::uint64_t s = 0; s < 8; ++s) {
    const PureStateVector seed_state = random_pure({4, 4}, 5300 + s);
    Vec amps = Vec::Zero(16);
    auto number = [](Index k) { return (k & 1) + ((k >> 1) & 1); };
    for (Index a = 0; a < 4; ++a)
      for (Index b = 0; b < 4; ++b)
        if (number(a) + number(b) == 2) amps(a * 4 + b) = seed_state.amps(a * 4 + b);
    amps /= amps.norm();
    const PureStateVector psi = PureStateVector::checked(amps, {4, 4});
    const auto d = number_decomposition(psi, n);
    CHECK(std::abs(d.number_entropy + d.configurational +
                   conditional_quantum(psi.density())) < 1e-9);
  }
}

}  // TEST_SUITE
