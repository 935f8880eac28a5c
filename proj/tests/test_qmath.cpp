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

#include "eub/qmath.hpp"
#include "eub/verify.hpp"

using namespace eub;

namespace {

Mat pauli_x() {
  Mat s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

PureStateVector bell_state() {
  Vec amps(4);
  amps << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return PureStateVector::checked(amps, {2, 2});
}

}  // namespace

TEST_SUITE("qmath") {

TEST_CASE("tensor product basics") {
  const Mat i2 = Mat::Identity(2, 2);
  CHECK((tensor_product(i2, i2) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  Mat a = Mat::Zero(2, 2), b = Mat::Zero(2, 2);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  Mat expect = Mat::Zero(4, 4);
  expect(1, 1) = 1.0;
  CHECK((tensor_product(a, b) - expect).cwiseAbs().maxCoeff() == 0.0);

  // sigma_x (x) sigma_x maps |00> to |11>
  Vec e00 = Vec::Zero(4);
  e00(0) = 1.0;
  const Vec flipped = tensor_product(pauli_x(), pauli_x()) * e00;
  Vec e11 = Vec::Zero(4);
  e11(3) = 1.0;
  CHECK((flipped - e11).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("tensor product associates") {
  const Mat a = random_unitary(2, 11);
  const Mat b = random_unitary(3, 12);
  const Mat c = random_unitary(2, 13);
  CHECK((tensor_product(tensor_product(a, b), c) -
         tensor_product(a, tensor_product(b, c)))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("partial trace of Bell state is maximally mixed") {
  const DensityOperator rho = bell_state().density();
  const DensityOperator rb = partial_trace(rho, 1);
  CHECK((rb.mat - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(rb.dims == DimList{2});
}

TEST_CASE("partial trace of a product state returns the factors") {
  const DensityOperator ra = random_density(2, 2, 31);
  const DensityOperator rb = random_density(3, 3, 32);
  const DensityOperator rho =
      DensityOperator{tensor_product(ra.mat, rb.mat), {2, 3}};
  CHECK((partial_trace(rho, 0).mat - ra.mat).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((partial_trace(rho, 1).mat - rb.mat).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace contracts correlated diagonals") {
  // rho = sum_i lambda_i |ii><ii| on 3x3, keep B -> diag(lambda)
  RVec lam(3);
  lam << 0.5, 0.3, 0.2;
  Mat m = Mat::Zero(9, 9);
  for (int i = 0; i < 3; ++i) m(i * 3 + i, i * 3 + i) = lam(i);
  const DensityOperator rho{m, {3, 3}};
  const Mat rb = partial_trace(rho, 1).mat;
  for (int i = 0; i < 3; ++i) CHECK(std::abs(rb(i, i).real() - lam(i)) < 1e-15);
}

TEST_CASE("partial trace rejects bad subsystem indices") {
  const DensityOperator rho = bell_state().density();
  CHECK_THROWS_AS((void)partial_trace(rho, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(rho, -1), std::invalid_argument);
}

TEST_CASE("spectral function closed forms") {
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const Mat root = matrix_sqrt(d);
  CHECK(std::abs(root(0, 0).real() - 2.0) < 1e-14);
  CHECK(std::abs(root(1, 1).real() - 3.0) < 1e-14);

  // log2 of I/2 in d = 2 is -I
  const Mat half = 0.5 * Mat::Identity(2, 2);
  const Mat lg = spectral_function(
      half, [](double x) { return Complex(std::log2(x)); });
  CHECK((lg + Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

  // exp(i t sigma_x) at t = pi/2 equals i sigma_x
  const double t = std::acos(-1.0) / 2.0;
  const Mat u = spectral_function(
      pauli_x(), [t](double x) { return std::exp(Complex(0.0, t * x)); });
  CHECK((u - Complex(0.0, 1.0) * pauli_x()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral function with identity returns the input") {
  for (std::uint64_t s : {1u, 2u, 3u}) {
    const DensityOperator rho = random_density(5, 3, s);
    const Mat back = spectral_function(rho.mat, [](double x) { return Complex(x); });
    CHECK((back - rho.mat).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("schmidt coefficients of simple states") {
  Vec prod = Vec::Zero(4);
  prod(0) = 1.0;
  const auto sd0 = schmidt(PureStateVector::checked(prod, {2, 2}));
  CHECK(std::abs(sd0.coefficients(0) - 1.0) < 1e-14);

  const auto sd1 = schmidt(bell_state());
  CHECK(std::abs(sd1.coefficients(0) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(sd1.coefficients(1) - 1.0 / std::sqrt(2.0)) < 1e-14);

  Vec skew(4);
  skew << 2.0 / std::sqrt(5.0), 0, 0, 1.0 / std::sqrt(5.0);
  const auto sd2 = schmidt(PureStateVector::checked(skew, {2, 2}));
  CHECK(std::abs(sd2.coefficients(0) - 2.0 / std::sqrt(5.0)) < 1e-14);
  CHECK(std::abs(sd2.coefficients(1) - 1.0 / std::sqrt(5.0)) < 1e-14);
}

TEST_CASE("schmidt reconstruction and ordering on random states") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const PureStateVector psi = random_pure({3, 4}, 100 + s);
    const auto sd = schmidt(psi);
    double norm2 = 0.0;
    Vec rebuilt = Vec::Zero(psi.dim());
    for (Index k = 0; k < sd.coefficients.size(); ++k) {
      CHECK(sd.coefficients(k) >= -1e-15);
      if (k > 0) CHECK(sd.coefficients(k) <= sd.coefficients(k - 1) + 1e-12);
      norm2 += sd.coefficients(k) * sd.coefficients(k);
      rebuilt += sd.coefficients(k) *
                 tensor_product_vec(sd.left_vectors.col(k), sd.right_vectors.col(k));
    }
    CHECK(std::abs(norm2 - 1.0) < 1e-10);
    CHECK((rebuilt - psi.amps).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("purification round trips") {
  // canonical purification of I/2 has Bell coefficients
  const DensityOperator mixed{0.5 * Mat::Identity(2, 2), {2}};
  const PureStateVector bellish = purify(mixed);
  CHECK(bellish.dims[1] == 2);
  const auto sd = schmidt(bellish);
  CHECK(std::abs(sd.coefficients(0) - 1.0 / std::sqrt(2.0)) < 1e-12);

  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  const PureStateVector psi = purify(DensityOperator{d, {2}});
  const auto sd2 = schmidt(psi);
  CHECK(std::abs(sd2.coefficients(0) - std::sqrt(0.75)) < 1e-12);
  CHECK(std::abs(sd2.coefficients(1) - std::sqrt(0.25)) < 1e-12);

  // pure input keeps a one-dimensional ancilla
  const PureStateVector pure = random_pure({3}, 7);
  const PureStateVector ext = purify(pure.density());
  CHECK(ext.dims[1] == 1);
}

TEST_CASE("purification recovers random states up to d = 8") {
  for (Index d : {2, 3, 5, 8}) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const DensityOperator rho = random_density(d, 1 + static_cast<Index>(s % d), 200 + s);
      const PureStateVector psi = purify(rho);
      const DensityOperator back = partial_trace(psi.density(), 0);
      CHECK((back.mat - rho.mat).cwiseAbs().maxCoeff() < 1e-9);

      // squared Schmidt coefficients match the spectrum
      const auto sd = schmidt(psi);
      RVec ev = hermitian_eigenvalues(rho.mat);
      std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
      for (Index k = 0; k < sd.coefficients.size(); ++k)
        CHECK(std::abs(sd.coefficients(k) * sd.coefficients(k) - ev(k)) < 1e-9);
    }
  }
}

TEST_CASE("density operator validation") {
  Mat bad = Mat::Identity(2, 2);
  bad(0, 1) = 0.5;  // not Hermitian
  CHECK_THROWS_AS((void)DensityOperator::checked(bad, {2}), std::invalid_argument);

  Mat neg = Mat::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;  // negative eigenvalue
  CHECK_THROWS_AS((void)DensityOperator::checked(neg, {2}), std::invalid_argument);

  Mat off = 0.4 * Mat::Identity(2, 2);  // trace != 1
  CHECK_THROWS_AS((void)DensityOperator::checked(off, {2}), std::invalid_argument);

  CHECK_NOTHROW((void)DensityOperator::checked(0.5 * Mat::Identity(2, 2), {2}));
}

}  // TEST_SUITE
