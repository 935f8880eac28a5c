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
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "eub/kernels.hpp"

namespace k = eub::kernels;

namespace {

std::vector<double> random_probs(std::size_t n, unsigned seed, double zero_frac = 0.1) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) {
    x = u(gen) < zero_frac ? 0.0 : std::pow(u(gen), 8.0);  // spread magnitudes
    total += x;
  }
  if (total > 0.0)
    for (auto& x : p) x /= total;
  return p;
}

std::vector<std::complex<double>> random_amps(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g;
  std::vector<std::complex<double>> a(n);
  for (auto& x : a) x = {g(gen), g(gen)};
  return a;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar entropy matches closed forms") {
  const std::vector<double> pure{1.0, 0.0};
  CHECK(k::scalar::entropy_bits(pure.data(), pure.size()) == 0.0);
  const std::vector<double> fair{0.5, 0.5};
  CHECK(std::abs(k::scalar::entropy_bits(fair.data(), fair.size()) - 1.0) < 1e-15);
  // uniform over 1024 outcomes
  std::vector<double> u(1024, 1.0 / 1024.0);
  CHECK(std::abs(k::scalar::entropy_bits(u.data(), u.size()) - 10.0) < 1e-12);
}

TEST_CASE("avx2 variants agree with the scalar reference") {
  if (!k::avx2::compiled()) return;
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 64u, 1023u, 100001u}) {
    const auto p = random_probs(n, 17u + static_cast<unsigned>(n));
    CHECK(std::abs(k::avx2::sum(p.data(), n) - k::scalar::sum(p.data(), n)) <=
          1e-13 * std::max<std::size_t>(n, 1));
    CHECK(std::abs(k::avx2::entropy_bits(p.data(), n) -
                   k::scalar::entropy_bits(p.data(), n)) <= 1e-11);

    const auto a = random_amps(n, 23u + static_cast<unsigned>(n));
    std::vector<double> out_s(n), out_v(n);
    k::scalar::squared_modulus(a.data(), out_s.data(), n);
    k::avx2::squared_modulus(a.data(), out_v.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(out_s[i] == out_v[i]);
  }
}

TEST_CASE("avx2 entropy handles extreme magnitudes") {
  if (!k::avx2::compiled()) return;
  std::vector<double> p{1e-300, 1e-200, 1e-100, 1e-30, 1e-16, 0.1, 0.9, 0.0};
  CHECK(std::abs(k::avx2::entropy_bits(p.data(), p.size()) -
                 k::scalar::entropy_bits(p.data(), p.size())) <= 1e-12);
}

TEST_CASE("weighted log kernel honors the weight cutoff") {
  const std::vector<double> w{0.5, 1e-16, 0.25, 0.0, 0.25};
  const std::vector<double> s{0.5, 1e-30, 0.25, 0.125, 1.0};
  const double cutoff = 1e-15;
  // only entries 0, 2 and 4 are live: 0.5*1 + 0.25*2 + 0.25*0
  const double expect = 1.0;
  CHECK(std::abs(k::scalar::neg_weighted_log2(w.data(), s.data(), w.size(), cutoff) -
                 expect) < 1e-14);
  if (k::avx2::compiled()) {
    CHECK(std::abs(k::avx2::neg_weighted_log2(w.data(), s.data(), w.size(), cutoff) -
                   expect) < 1e-12);
  }
}

TEST_CASE("dispatched kernels match the scalar reference") {
  INFO("active backend: ", k::backend_name());
  const auto p = random_probs(4097, 71u);
  CHECK(std::abs(k::entropy_bits(p.data(), p.size()) -
                 k::scalar::entropy_bits(p.data(), p.size())) <= 1e-11);
  CHECK(std::abs(k::sum(p.data(), p.size()) - k::scalar::sum(p.data(), p.size())) <=
        1e-12);
}

}  // TEST_SUITE
