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

#if defined(__AVX2__)

#include <immintrin.h>

#include <cfloat>
#include <cmath>
#include <cstdint>
#include <cstring>

namespace eub::kernels::avx2 {

namespace {

// fdlibm e_log.c minimax coefficients for log(1+f) on [sqrt(1/2)-1, sqrt(2)-1].
constexpr double kLg1 = 6.666666666666735130e-01;
constexpr double kLg2 = 3.999999999940941908e-01;
constexpr double kLg3 = 2.857142874366239149e-01;
constexpr double kLg4 = 2.222219843214978396e-01;
constexpr double kLg5 = 1.818357216161805012e-01;
constexpr double kLg6 = 1.531383769920937332e-01;
constexpr double kLg7 = 1.479819860511658591e-01;
constexpr double kInvLn2 = 1.4426950408889634074;
constexpr double kSqrt2 = 1.4142135623730951;

// Scalar twin of the vector core, used for loop remainders so that both
// paths evaluate the identical polynomial.
double log2_core(double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, 8);
  double e = static_cast<double>(static_cast<int>(bits >> 52) - 1023);
  bits = (bits & 0x000fffffffffffffULL) | 0x3ff0000000000000ULL;
  double m;
  std::memcpy(&m, &bits, 8);
  if (m > kSqrt2) {
    m *= 0.5;
    e += 1.0;
  }
  const double f = m - 1.0;
  const double s = f / (2.0 + f);
  const double z = s * s;
  const double w = z * z;
  const double t1 = w * (kLg2 + w * (kLg4 + w * kLg6));
  const double t2 = z * (kLg1 + w * (kLg3 + w * (kLg5 + w * kLg7)));
  const double hfsq = 0.5 * f * f;
  const double ln = f - (hfsq - s * (hfsq + t1 + t2));
  return e + ln * kInvLn2;
}

// log2 of positive normal doubles (four lanes).
inline __m256d log2_positive(__m256d x) {
  const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
  const __m256i one_exp = _mm256_set1_epi64x(0x3ff0000000000000LL);
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);

  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i expo = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(expo, magic)),
                            _mm256_castsi256_pd(magic));
  e = _mm256_sub_pd(e, _mm256_set1_pd(1023.0));
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_exp));

  const __m256d too_big = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), too_big);
  e = _mm256_add_pd(e, _mm256_and_pd(too_big, _mm256_set1_pd(1.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d f = _mm256_sub_pd(m, one);
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(f, _mm256_set1_pd(2.0)));
  const __m256d z = _mm256_mul_pd(s, s);
  const __m256d w = _mm256_mul_pd(z, z);
  const __m256d t1 = _mm256_mul_pd(
      w, _mm256_add_pd(_mm256_set1_pd(kLg2),
                       _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(kLg4),
                                                      _mm256_mul_pd(w, _mm256_set1_pd(kLg6))))));
  const __m256d t2 = _mm256_mul_pd(
      z, _mm256_add_pd(
             _mm256_set1_pd(kLg1),
             _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(kLg3),
                                            _mm256_mul_pd(w, _mm256_add_pd(_mm256_set1_pd(kLg5),
                                                                           _mm256_mul_pd(w, _mm256_set1_pd(kLg7))))))));
  const __m256d hfsq = _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_mul_pd(f, f));
  const __m256d r = _mm256_add_pd(t1, t2);
  const __m256d ln =
      _mm256_sub_pd(f, _mm256_sub_pd(hfsq, _mm256_mul_pd(s, _mm256_add_pd(hfsq, r))));
  return _mm256_add_pd(e, _mm256_mul_pd(ln, _mm256_set1_pd(kInvLn2)));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s2 = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s2, _mm_unpackhi_pd(s2, s2)));
}

}  // namespace

bool compiled() { return true; }

void squared_modulus(const std::complex<double>* a, double* out, std::size_t n) {
  const double* raw = reinterpret_cast<const double*>(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(raw + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(raw + 2 * i + 4);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
  }
  for (; i < n; ++i) {
    const double re = a[i].real(), im = a[i].imag();
    out[i] = re * re + im * im;
  }
}

double sum(const double* p, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(p + i + 4));
  }
  double out = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) out += p[i];
  return out;
}

double entropy_bits(const double* p, std::size_t n) {
  const __m256d tiny = _mm256_set1_pd(DBL_MIN);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    const __m256d live = _mm256_cmp_pd(v, tiny, _CMP_GE_OQ);
    const __m256d arg = _mm256_blendv_pd(one, v, live);
    acc = _mm256_sub_pd(acc, _mm256_and_pd(_mm256_mul_pd(v, log2_positive(arg)), live));
  }
  double out = hsum(acc);
  for (; i < n; ++i) {
    if (p[i] >= DBL_MIN) out -= p[i] * log2_core(p[i]);
  }
  return out;
}

double neg_weighted_log2(const double* w, const double* s, std::size_t n,
                         double w_cutoff) {
  const __m256d cutoff = _mm256_set1_pd(w_cutoff);
  const __m256d tiny = _mm256_set1_pd(DBL_MIN);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wv = _mm256_loadu_pd(w + i);
    const __m256d live = _mm256_cmp_pd(wv, cutoff, _CMP_GE_OQ);
    const __m256d sv = _mm256_max_pd(_mm256_loadu_pd(s + i), tiny);
    const __m256d arg = _mm256_blendv_pd(one, sv, live);
    acc = _mm256_sub_pd(acc, _mm256_and_pd(_mm256_mul_pd(wv, log2_positive(arg)), live));
  }
  double out = hsum(acc);
  for (; i < n; ++i) {
    if (w[i] >= w_cutoff) {
      const double arg = s[i] < DBL_MIN ? DBL_MIN : s[i];
      out -= w[i] * log2_core(arg);
    }
  }
  return out;
}

}  // namespace eub::kernels::avx2

#else  // !defined(__AVX2__)

namespace eub::kernels::avx2 {

bool compiled() { return false; }

void squared_modulus(const std::complex<double>* a, double* out, std::size_t n) {
  scalar::squared_modulus(a, out, n);
}
double sum(const double* p, std::size_t n) { return scalar::sum(p, n); }
double entropy_bits(const double* p, std::size_t n) {
  return scalar::entropy_bits(p, n);
}
double neg_weighted_log2(const double* w, const double* s, std::size_t n,
                         double w_cutoff) {
  return scalar::neg_weighted_log2(w, s, n, w_cutoff);
}

}  // namespace eub::kernels::avx2

#endif
