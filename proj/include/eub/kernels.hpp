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

#pragma once

#include <complex>
#include <cstddef>

namespace eub::kernels {

// Reduction kernels behind the entropy and probability-table code.  The
// backend is resolved once per process: AVX2 on CPUs that support it, the
// scalar reference otherwise.  EUB_KERNEL=scalar|avx2 forces a backend.
const char* backend_name();

// out[i] = |a[i]|^2
void squared_modulus(const std::complex<double>* a, double* out, std::size_t n);

// Plain sum.
double sum(const double* p, std::size_t n);

// -sum_i p_i log2(p_i) over entries with p_i > 0 (the 0 log 0 = 0
// convention; entries below the smallest normal double count as zero).
double entropy_bits(const double* p, std::size_t n);

// -sum_i w_i log2(s_i) over entries with w_i >= w_cutoff.  s entries are
// clamped to the smallest normal double before the log.
double neg_weighted_log2(const double* w, const double* s, std::size_t n,
                         double w_cutoff);

// Scalar reference implementations (libm log2); always available.
namespace scalar {
void squared_modulus(const std::complex<double>* a, double* out, std::size_t n);
double sum(const double* p, std::size_t n);
double entropy_bits(const double* p, std::size_t n);
double neg_weighted_log2(const double* w, const double* s, std::size_t n,
                         double w_cutoff);
}  // namespace scalar

// AVX2 variants; compiled on x86-64, selected only when the CPU supports
// AVX2 at runtime.
namespace avx2 {
bool compiled();
void squared_modulus(const std::complex<double>* a, double* out, std::size_t n);
double sum(const double* p, std::size_t n);
double entropy_bits(const double* p, std::size_t n);
double neg_weighted_log2(const double* w, const double* s, std::size_t n,
                         double w_cutoff);
}  // namespace avx2

}  // namespace eub::kernels
