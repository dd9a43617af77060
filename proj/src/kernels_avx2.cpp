// Copyright 2026 the ringcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0

// AVX2 variants of the arithmetic kernels. This TU is compiled with
// -mavx2 -mfma and must only be entered after a cpuid check.

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace ringcap::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

}  // namespace

double dot_avx2(const double* x, const double* y, std::size_t n) {
  const std::size_t n4 = n & ~std::size_t{3};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n4; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum(acc);
  for (std::size_t i = n4; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d va = _mm256_set1_pd(a);
  for (std::size_t i = 0; i < n4; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (std::size_t i = n4; i < n; ++i) y[i] += a * x[i];
}

void xpby_avx2(const double* x, double b, double* y, std::size_t n) {
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d vb = _mm256_set1_pd(b);
  for (std::size_t i = 0; i < n4; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(vb, vy, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, vy);
  }
  for (std::size_t i = n4; i < n; ++i) y[i] = x[i] + b * y[i];
}

void hadamard_avx2(const double* x, const double* y, double* out,
                   std::size_t n) {
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  for (std::size_t i = n4; i < n; ++i) out[i] = x[i] * y[i];
}

void spmv_avx2(const std::int32_t* row_ptr, const std::int32_t* cols,
               const double* vals, std::int32_t nrows, const double* x,
               double* y) {
  for (std::int32_t r = 0; r < nrows; ++r) {
    const std::int32_t begin = row_ptr[r];
    const std::int32_t end = row_ptr[r + 1];
    std::int32_t k = begin;
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      const __m128i idx = _mm_loadu_si128(
          reinterpret_cast<const __m128i*>(cols + k));
      const __m256d vx = _mm256_i32gather_pd(x, idx, 8);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(vals + k), vx, acc);
    }
    double s = hsum(acc);
    for (; k < end; ++k) s += vals[k] * x[cols[k]];
    y[r] = s;
  }
}

double max_dot_avx2(const double* xs, const double* ys, std::size_t n,
                    double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  const std::size_t n4 = n & ~std::size_t{3};
  double best;
  if (n4 > 0) {
    __m256d vbest = _mm256_set1_pd(-1e300);
    for (std::size_t i = 0; i < n4; i += 4) {
      const __m256d d = _mm256_fmadd_pd(
          _mm256_loadu_pd(xs + i), vc,
          _mm256_mul_pd(_mm256_loadu_pd(ys + i), vs));
      vbest = _mm256_max_pd(vbest, d);
    }
    best = hmax(vbest);
  } else {
    best = xs[0] * c + ys[0] * s;
  }
  for (std::size_t i = n4; i < n; ++i) {
    const double d = xs[i] * c + ys[i] * s;
    if (d > best) best = d;
  }
  return best;
}

}  // namespace ringcap::kernels
