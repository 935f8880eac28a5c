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

#include "eub/kernels.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace eub::kernels {

namespace scalar {

void squared_modulus(const std::complex<double>* a, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = a[i].real(), im = a[i].imag();
    out[i] = re * re + im * im;
  }
}

double sum(const double* p, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += p[i];
  return acc;
}

double entropy_bits(const double* p, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] >= DBL_MIN) acc -= p[i] * std::log2(p[i]);
  }
  return acc;
}

double neg_weighted_log2(const double* w, const double* s, std::size_t n,
                         double w_cutoff) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] >= w_cutoff) {
      const double arg = s[i] < DBL_MIN ? DBL_MIN : s[i];
      acc -= w[i] * std::log2(arg);
    }
  }
  return acc;
}

}  // namespace scalar

namespace {

enum class Backend { Scalar, Avx2 };

Backend resolve_backend() {
  if (const char* force = std::getenv("EUB_KERNEL")) {
    if (std::strcmp(force, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(force, "avx2") == 0 && avx2::compiled()) return Backend::Avx2;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2::compiled() && __builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
  return Backend::Scalar;
}

Backend active_backend() {
  static const Backend b = resolve_backend();
  return b;
}

}  // namespace

const char* backend_name() {
  return active_backend() == Backend::Avx2 ? "avx2" : "scalar";
}

void squared_modulus(const std::complex<double>* a, double* out, std::size_t n) {
  if (active_backend() == Backend::Avx2) return avx2::squared_modulus(a, out, n);
  scalar::squared_modulus(a, out, n);
}

double sum(const double* p, std::size_t n) {
  if (active_backend() == Backend::Avx2) return avx2::sum(p, n);
  return scalar::sum(p, n);
}

double entropy_bits(const double* p, std::size_t n) {
  if (active_backend() == Backend::Avx2) return avx2::entropy_bits(p, n);
  return scalar::entropy_bits(p, n);
}

double neg_weighted_log2(const double* w, const double* s, std::size_t n,
                         double w_cutoff) {
  if (active_backend() == Backend::Avx2)
    return avx2::neg_weighted_log2(w, s, n, w_cutoff);
  return scalar::neg_weighted_log2(w, s, n, w_cutoff);
}

}  // namespace eub::kernels
