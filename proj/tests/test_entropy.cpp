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

#include "eub/entropy.hpp"
#include "eub/measurement.hpp"
#include "eub/verify.hpp"

using namespace eub;

namespace {

// H(3/4, 1/4) evaluated by hand: 2 - (3/4) log2 3.
const double kEntropyThreeQuarters = 2.0 - 0.75 * std::log2(3.0);

DensityOperator bell_density() {
  Vec amps(4);
  amps << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return PureStateVector::checked(amps, {2, 2}).density();
}

DensityOperator classically_correlated() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return DensityOperator::checked(m, {2, 2});
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("shannon closed forms") {
  RVec pure(2);
  pure << 1.0, 0.0;
  CHECK(shannon(pure) == 0.0);

  RVec fair(2);
  fair << 0.5, 0.5;
  CHECK(std::abs(shannon(fair) - 1.0) < 1e-15);

  RVec skew(2);
  skew << 0.75, 0.25;
  CHECK(std::abs(shannon(skew) - kEntropyThreeQuarters) < 1e-14);
}

TEST_CASE("shannon clips rounding noise but rejects real negatives") {
  RVec noisy(2);
  noisy << 1.0, -1e-13;
  CHECK(shannon(noisy) == 0.0);
  RVec bad(2);
  bad << 1.0, -1e-9;
  CHECK_THROWS_AS((void)shannon(bad), std::invalid_argument);
}

TEST_CASE("von Neumann entropy closed forms") {
  const PureStateVector psi = random_pure({4}, 5);
  CHECK(std::abs(von_neumann(psi.density())) < 1e-11);

  const DensityOperator mixed{Mat::Identity(3, 3) / 3.0, {3}};
  CHECK(std::abs(von_neumann(mixed) - std::log2(3.0)) < 1e-12);

  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  CHECK(std::abs(von_neumann(DensityOperator{d, {2}}) - kEntropyThreeQuarters) < 1e-12);
}

TEST_CASE("von Neumann entropy is unitarily invariant") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const DensityOperator rho = random_density(5, 3, 40 + s);
    const Mat u = random_unitary(5, 50 + s);
    const DensityOperator rotated{u * rho.mat * u.adjoint(), {5}};
    CHECK(std::abs(von_neumann(rho) - von_neumann(rotated)) < 1e-9);
  }
}

TEST_CASE("conditional quantum entropy") {
  const DensityOperator ra = random_density(2, 2, 61);
  const DensityOperator rb = random_density(3, 2, 62);
  const DensityOperator prod{tensor_product(ra.mat, rb.mat), {2, 3}};
  CHECK(std::abs(conditional_quantum(prod) - von_neumann(ra)) < 1e-10);

  CHECK(std::abs(conditional_quantum(bell_density()) + 1.0) < 1e-11);
  CHECK(std::abs(conditional_quantum(classically_correlated())) < 1e-11);
}

TEST_CASE("conditional entropy of separable states is nonnegative") {
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK(conditional_quantum(random_separable(2, 3, 3, 70 + s)) >= -1e-9);
}

TEST_CASE("mutual information closed forms and positivity") {
  const DensityOperator ra = random_density(2, 1, 81);
  const DensityOperator rb = random_density(2, 2, 82);
  const DensityOperator prod{tensor_product(ra.mat, rb.mat), {2, 2}};
  CHECK(std::abs(mutual_information(prod)) < 1e-10);
  CHECK(std::abs(mutual_information(bell_density()) - 2.0) < 1e-11);
  CHECK(std::abs(mutual_information(classically_correlated()) - 1.0) < 1e-11);
  for (std::uint64_t s = 0; s < 10; ++s)
    CHECK(mutual_information(random_density_bipartite(2, 3, 4, 90 + s)) >= -1e-9);
}

TEST_CASE("relative entropy closed forms and the support sentinel") {
  const DensityOperator rho = random_density(3, 2, 101);
  CHECK(std::abs(relative_entropy(rho, rho)) < 1e-9);

  Mat p0 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  const DensityOperator pure{p0, {2}};
  const DensityOperator mixed{0.5 * Mat::Identity(2, 2), {2}};
  CHECK(std::abs(relative_entropy(pure, mixed) - 1.0) < 1e-12);

  Mat p1 = Mat::Zero(2, 2);
  p1(1, 1) = 1.0;
  const double d = relative_entropy(pure, DensityOperator{p1, {2}});
  CHECK(is_infinite(d));
  CHECK(d > 1e308);  // total comparisons against the sentinel
}

TEST_CASE("data processing inequality under measurement channels") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityOperator rho = random_density(4, 3, 200 + s);
    const DensityOperator sigma = random_density(4, 4, 300 + s);
    const Measurement m = Measurement::basis(random_unitary(4, 400 + s));
    // dephasing in the measurement basis
    auto dephase = [&](const DensityOperator& r) {
      Mat out = Mat::Zero(4, 4);
      for (Index k = 0; k < 4; ++k) {
        const Mat p = m.element(k);
        out += p * r.mat * p;
      }
      return DensityOperator{out, {4}};
    };
    const double before = relative_entropy(rho, sigma);
    const double after = relative_entropy(dephase(rho), dephase(sigma));
    if (!is_infinite(before)) CHECK(after <= before + 1e-9);
  }
}

TEST_CASE("Araki-Lieb inequality on random states") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityOperator rho = random_density_bipartite(2, 3, 3, 500 + s);
    const double ha = von_neumann(partial_trace(rho, 0));
    const double hb = von_neumann(partial_trace(rho, 1));
    CHECK(std::abs(ha - hb) <= von_neumann(rho) + 1e-9);
  }
}

TEST_CASE("classical conditional entropy") {
  RMat corr = RMat::Zero(2, 2);
  corr(0, 0) = 0.5;
  corr(1, 1) = 0.5;
  CHECK(std::abs(conditional_classical(JointDistribution::checked(corr))) < 1e-14);

  RMat indep = RMat::Constant(2, 2, 0.25);
  CHECK(std::abs(conditional_classical(JointDistribution::checked(indep)) - 1.0) <
        1e-14);

  // H(XY) = 1.5 and H(Y) = 1 by direct evaluation, so H(X|Y) = 0.5
  RMat t(2, 2);
  t << 0.5, 0.25, 0.0, 0.25;
  CHECK(std::abs(conditional_classical(JointDistribution::checked(t)) - 0.5) < 1e-14);
}

TEST_CASE("classical relative entropy") {
  RVec p(2), q(2);
  p << 0.3, 0.7;
  CHECK(std::abs(relative_classical(p, p)) < 1e-14);
  p << 1.0, 0.0;
  q << 0.5, 0.5;
  CHECK(std::abs(relative_classical(p, q) - 1.0) < 1e-14);
  p << 0.5, 0.5;
  q << 1.0, 0.0;
  CHECK(is_infinite(relative_classical(p, q)));
}

TEST_CASE("joint distribution validation") {
  RMat neg(2, 2);
  neg << 0.5, 0.5, 0.0, -1e-3;
  CHECK_THROWS_AS((void)JointDistribution::checked(neg), std::invalid_argument);
  RMat short_mass = RMat::Constant(2, 2, 0.2);
  CHECK_THROWS_AS((void)JointDistribution::checked(short_mass), std::invalid_argument);
}

}  // TEST_SUITE
